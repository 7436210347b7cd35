#include "so3/fgab.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace so3 {

namespace {

Integer floor_mod(const Integer& x, const Integer& d)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return r;
}

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Inverse of a modulo m, for gcd(a, m) == 1 and m >= 1.
Integer inverse_mod(const Integer& a, const Integer& m)
{
    Integer r;
    if (m == 1)
        return 0;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::logic_error("inverse_mod: not invertible");
    return r;
}

void require_same_group(const GroupElement& x, const GroupElement& y)
{
    if (!(x.group() == y.group()))
        throw std::invalid_argument("group mismatch: " + x.group().to_string() + " vs " + y.group().to_string());
}

}  // namespace

Integer gcd(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer content(std::span<const Integer> v)
{
    Integer g = 0;
    for (const auto& x : v)
        g = gcd(g, x);
    return g;
}

/****************************************************
 *                  IntegerMatrix
 ***************************************************/

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("IntegerMatrix: ragged rows");
        for (long x : row)
            entries_.emplace_back(x);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n)
{
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Integer>>& rows)
{
    IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_)
            throw std::invalid_argument("IntegerMatrix: ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

IntegerMatrix IntegerMatrix::column(std::span<const Integer> entries)
{
    IntegerMatrix m(entries.size(), 1);
    for (std::size_t r = 0; r < entries.size(); ++r)
        m(r, 0) = entries[r];
    return m;
}

IntegerMatrix IntegerMatrix::diagonal(std::span<const Integer> entries)
{
    IntegerMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, i) = entries[i];
    return m;
}

IntegerMatrix IntegerMatrix::transpose() const
{
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

std::vector<Integer> IntegerMatrix::apply(std::span<const Integer> x) const
{
    if (x.size() != cols_)
        throw std::invalid_argument("IntegerMatrix::apply: dimension mismatch");
    std::vector<Integer> y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            y[r] += (*this)(r, c) * x[c];
    return y;
}

bool IntegerMatrix::is_symmetric() const
{
    if (!is_square())
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r))
                return false;
    return true;
}

Integer IntegerMatrix::determinant() const
{
    if (!is_square())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0)
        return 1;
    IntegerMatrix m = *this;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m(k, c), m(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("IntegerMatrix product: dimension mismatch");
    IntegerMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                p(i, j) += a(i, k) * b(k, j);
        }
    return p;
}

std::string IntegerMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? ", " : "") << (*this)(r, c).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

/****************************************************
 *                Smith normal form
 ***************************************************/

std::vector<Integer> SnfDecomposition::diagonal() const
{
    std::vector<Integer> diag;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
        diag.push_back(d(i, i));
    return diag;
}

SnfDecomposition smith_normal_form(const IntegerMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    IntegerMatrix d = a;
    IntegerMatrix u = IntegerMatrix::identity(m);
    IntegerMatrix uinv = IntegerMatrix::identity(m);
    IntegerMatrix v = IntegerMatrix::identity(n);

    // Row operations are mirrored on u (left) and as inverse column
    // operations on uinv (right); column operations on v.
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t c = 0; c < n; ++c)
            std::swap(d(i, c), d(j, c));
        for (std::size_t c = 0; c < m; ++c) {
            std::swap(u(i, c), u(j, c));
            std::swap(uinv(c, i), uinv(c, j));
        }
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t r = 0; r < m; ++r)
            std::swap(d(r, i), d(r, j));
        for (std::size_t r = 0; r < n; ++r)
            std::swap(v(r, i), v(r, j));
    };
    // row_target += q * row_source
    auto add_row = [&](std::size_t target, std::size_t source, const Integer& q) {
        for (std::size_t c = 0; c < n; ++c)
            d(target, c) += q * d(source, c);
        for (std::size_t c = 0; c < m; ++c) {
            u(target, c) += q * u(source, c);
            uinv(c, source) -= q * uinv(c, target);
        }
    };
    auto add_col = [&](std::size_t target, std::size_t source, const Integer& q) {
        for (std::size_t r = 0; r < m; ++r)
            d(r, target) += q * d(r, source);
        for (std::size_t r = 0; r < n; ++r)
            v(r, target) += q * v(r, source);
    };

    const std::size_t k = std::min(m, n);
    for (std::size_t t = 0; t < k; ++t) {
        bool exhausted = false;
        for (;;) {
            // Pivot on the entry of least absolute value.
            std::size_t pi = m, pj = n;
            Integer best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (d(i, j) != 0 && (pi == m || abs_value(d(i, j)) < best)) {
                        best = abs_value(d(i, j));
                        pi = i;
                        pj = j;
                    }
            if (pi == m) {
                exhausted = true;
                break;
            }
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0)
                    continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
                add_row(i, t, -q);
                dirty = dirty || d(i, t) != 0;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0)
                    continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
                add_col(j, t, -q);
                dirty = dirty || d(t, j) != 0;
            }
            if (dirty)
                continue;

            // Pivot must divide the remaining block; otherwise fold the
            // offending row in and reduce again.
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == m)
                break;
            add_row(t, bad, 1);
        }
        if (exhausted)
            break;
        if (d(t, t) < 0) {
            for (std::size_t r = 0; r < m; ++r)
                d(r, t) = -d(r, t);
            for (std::size_t r = 0; r < n; ++r)
                v(r, t) = -v(r, t);
        }
    }
    return {std::move(u), std::move(d), std::move(v), std::move(uinv)};
}

/****************************************************
 *                   FgAbGroup
 ***************************************************/

FgAbGroup::FgAbGroup(std::size_t free_rank, std::vector<Integer> torsion) : free_rank_(free_rank), torsion_(std::move(torsion))
{
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] < 2)
            throw std::invalid_argument("FgAbGroup: torsion coefficient " + torsion_[i].get_str() + " < 2");
        if (i > 0 && !mpz_divisible_p(torsion_[i].get_mpz_t(), torsion_[i - 1].get_mpz_t()))
            throw std::invalid_argument("FgAbGroup: torsion coefficients do not form a divisibility chain");
    }
}

FgAbGroup FgAbGroup::from_cyclic_orders(std::size_t free_rank, std::span<const Integer> orders)
{
    std::vector<Integer> finite;
    for (const auto& o : orders) {
        if (o == 0)
            ++free_rank;
        else if (abs_value(o) != 1)
            finite.push_back(abs_value(o));
    }
    if (finite.empty())
        return FgAbGroup(free_rank, {});
    auto snf = smith_normal_form(IntegerMatrix::diagonal(finite));
    std::vector<Integer> torsion;
    for (const auto& x : snf.diagonal())
        if (x >= 2)
            torsion.push_back(x);
    return FgAbGroup(free_rank, std::move(torsion));
}

FgAbGroup FgAbGroup::cyclic(const Integer& order)
{
    const Integer orders[] = {order};
    return from_cyclic_orders(0, orders);
}

Integer FgAbGroup::order() const
{
    if (free_rank_ != 0)
        throw std::domain_error("order of an infinite group");
    Integer n = 1;
    for (const auto& d : torsion_)
        n *= d;
    return n;
}

std::string FgAbGroup::to_string() const
{
    if (is_trivial())
        return "0";
    std::string s;
    if (free_rank_ == 1)
        s = "Z";
    else if (free_rank_ > 1)
        s = "Z^" + std::to_string(free_rank_);
    for (const auto& d : torsion_) {
        if (!s.empty())
            s += " + ";
        s += "Z_" + d.get_str();
    }
    return s;
}

/****************************************************
 *                  GroupElement
 ***************************************************/

GroupElement::GroupElement(FgAbGroup group, std::vector<Integer> free_coords, std::vector<Integer> torsion_coords)
    : group_(std::move(group)), free_(std::move(free_coords)), torsion_(std::move(torsion_coords))
{
    if (free_.size() != group_.free_rank() || torsion_.size() != group_.torsion().size())
        throw std::invalid_argument("GroupElement: coordinate count does not match " + group_.to_string());
    for (std::size_t i = 0; i < torsion_.size(); ++i)
        torsion_[i] = floor_mod(torsion_[i], group_.torsion()[i]);
}

GroupElement GroupElement::zero(const FgAbGroup& group)
{
    return GroupElement(group, std::vector<Integer>(group.free_rank(), 0), std::vector<Integer>(group.torsion().size(), 0));
}

GroupElement GroupElement::from_generator_coords(const FgAbGroup& group, std::span<const Integer> coords)
{
    if (coords.size() != group.generator_count())
        throw std::invalid_argument("GroupElement: expected " + std::to_string(group.generator_count()) + " coordinates for " +
                                    group.to_string());
    const auto split = coords.begin() + static_cast<std::ptrdiff_t>(group.free_rank());
    return GroupElement(group, std::vector<Integer>(coords.begin(), split), std::vector<Integer>(split, coords.end()));
}

std::vector<Integer> GroupElement::generator_coords() const
{
    std::vector<Integer> c = free_;
    c.insert(c.end(), torsion_.begin(), torsion_.end());
    return c;
}

bool GroupElement::is_zero() const
{
    return std::all_of(free_.begin(), free_.end(), [](const Integer& x) { return x == 0; }) &&
           std::all_of(torsion_.begin(), torsion_.end(), [](const Integer& x) { return x == 0; });
}

std::string GroupElement::to_string() const
{
    std::string s = "(";
    auto coords = generator_coords();
    for (std::size_t i = 0; i < coords.size(); ++i)
        s += (i ? ", " : "") + coords[i].get_str();
    return s + ") in " + group_.to_string();
}

GroupElement add(const GroupElement& x, const GroupElement& y)
{
    require_same_group(x, y);
    auto a = x.generator_coords();
    auto b = y.generator_coords();
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return GroupElement::from_generator_coords(x.group(), a);
}

GroupElement negate(const GroupElement& x) { return scale(-1, x); }

GroupElement scale(const Integer& k, const GroupElement& x)
{
    auto a = x.generator_coords();
    for (auto& c : a)
        c *= k;
    return GroupElement::from_generator_coords(x.group(), a);
}

std::optional<GroupElement> solve_divisibility(const GroupElement& x, const Integer& n)
{
    if (n <= 0)
        throw std::invalid_argument("solve_divisibility: n must be positive");
    std::vector<Integer> free;
    for (const auto& c : x.free_coords()) {
        if (!mpz_divisible_p(c.get_mpz_t(), n.get_mpz_t()))
            return std::nullopt;
        free.push_back(c / n);
    }
    std::vector<Integer> torsion;
    const auto& orders = x.group().torsion();
    for (std::size_t i = 0; i < orders.size(); ++i) {
        // n*y = c (mod d) is solvable iff g = gcd(n, d) divides c.
        const Integer& d = orders[i];
        const Integer& c = x.torsion_coords()[i];
        const Integer g = gcd(n, d);
        if (!mpz_divisible_p(c.get_mpz_t(), g.get_mpz_t()))
            return std::nullopt;
        const Integer reduced = d / g;
        torsion.push_back(floor_mod(Integer(c / g) * inverse_mod(Integer(n / g), reduced), reduced));
    }
    return GroupElement(x.group(), std::move(free), std::move(torsion));
}

bool has_element_of_order(const FgAbGroup& g, const Integer& n)
{
    if (n <= 0)
        throw std::invalid_argument("has_element_of_order: n must be positive");
    // An element of order n exists iff every prime power exactly dividing n
    // divides some invariant factor.
    Integer rest = n;
    for (Integer p = 2; p * p <= rest; ++p) {
        if (!mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()))
            continue;
        Integer q = 1;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            q *= p;
        }
        if (std::none_of(g.torsion().begin(), g.torsion().end(),
                         [&](const Integer& d) { return mpz_divisible_p(d.get_mpz_t(), q.get_mpz_t()) != 0; }))
            return false;
    }
    if (rest > 1)
        return std::any_of(g.torsion().begin(), g.torsion().end(),
                           [&](const Integer& d) { return mpz_divisible_p(d.get_mpz_t(), rest.get_mpz_t()) != 0; });
    return true;
}

std::size_t mod_p_dimension(const FgAbGroup& g, const Integer& p)
{
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("mod_p_dimension: " + p.get_str() + " is not prime");
    std::size_t dim = g.free_rank();
    for (const auto& d : g.torsion())
        if (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()))
            ++dim;
    return dim;
}

/****************************************************
 *                    Functors
 ***************************************************/

FgAbGroup direct_sum(const FgAbGroup& g, const FgAbGroup& h)
{
    std::vector<Integer> orders = g.torsion();
    orders.insert(orders.end(), h.torsion().begin(), h.torsion().end());
    return FgAbGroup::from_cyclic_orders(g.free_rank() + h.free_rank(), orders);
}

FgAbGroup tensor(const FgAbGroup& g, const FgAbGroup& h)
{
    std::vector<Integer> orders;
    for (std::size_t i = 0; i < g.free_rank(); ++i)
        orders.insert(orders.end(), h.torsion().begin(), h.torsion().end());
    for (std::size_t i = 0; i < h.free_rank(); ++i)
        orders.insert(orders.end(), g.torsion().begin(), g.torsion().end());
    for (const auto& a : g.torsion())
        for (const auto& b : h.torsion())
            orders.push_back(gcd(a, b));
    return FgAbGroup::from_cyclic_orders(g.free_rank() * h.free_rank(), orders);
}

FgAbGroup tor(const FgAbGroup& g, const FgAbGroup& h)
{
    std::vector<Integer> orders;
    for (const auto& a : g.torsion())
        for (const auto& b : h.torsion())
            orders.push_back(gcd(a, b));
    return FgAbGroup::from_cyclic_orders(0, orders);
}

FgAbGroup hom(const FgAbGroup& g, const FgAbGroup& h)
{
    // Hom(Z, H) = H, Hom(Z_m, Z) = 0, Hom(Z_m, Z_n) = Z_gcd(m,n).
    std::vector<Integer> orders;
    for (std::size_t i = 0; i < g.free_rank(); ++i)
        orders.insert(orders.end(), h.torsion().begin(), h.torsion().end());
    for (const auto& a : g.torsion())
        for (const auto& b : h.torsion())
            orders.push_back(gcd(a, b));
    return FgAbGroup::from_cyclic_orders(g.free_rank() * h.free_rank(), orders);
}

FgAbGroup ext(const FgAbGroup& g, const FgAbGroup& h)
{
    // Ext(Z, -) = 0, Ext(Z_m, Z) = Z_m, Ext(Z_m, Z_n) = Z_gcd(m,n).
    std::vector<Integer> orders;
    for (const auto& a : g.torsion()) {
        for (std::size_t i = 0; i < h.free_rank(); ++i)
            orders.push_back(a);
        for (const auto& b : h.torsion())
            orders.push_back(gcd(a, b));
    }
    return FgAbGroup::from_cyclic_orders(0, orders);
}

/****************************************************
 *                   Cokernels
 ***************************************************/

FgAbGroup cokernel(const IntegerMatrix& a) { return cokernel_with_map(a).group; }

Cokernel cokernel_with_map(const IntegerMatrix& a)
{
    const auto snf = smith_normal_form(a);
    const std::size_t m = a.rows();
    const auto diag = snf.diagonal();

    std::vector<std::size_t> free_idx, tors_idx;
    std::vector<Integer> torsion;
    for (std::size_t i = 0; i < m; ++i) {
        const Integer di = i < diag.size() ? diag[i] : Integer(0);
        if (di == 0) {
            free_idx.push_back(i);
        }
        else if (di >= 2) {
            tors_idx.push_back(i);
            torsion.push_back(di);
        }
    }
    std::vector<std::size_t> order = free_idx;
    order.insert(order.end(), tors_idx.begin(), tors_idx.end());

    Cokernel result{FgAbGroup(free_idx.size(), std::move(torsion)), IntegerMatrix(order.size(), m), IntegerMatrix(m, order.size())};
    for (std::size_t g = 0; g < order.size(); ++g)
        for (std::size_t c = 0; c < m; ++c) {
            result.projection(g, c) = snf.u(order[g], c);
            result.section(c, g) = snf.u_inverse(c, order[g]);
        }
    return result;
}

GroupElement Cokernel::project(std::span<const Integer> ambient) const
{
    auto coords = projection.apply(ambient);
    return GroupElement::from_generator_coords(group, coords);
}

std::vector<Integer> Cokernel::lift(const GroupElement& x) const
{
    if (!(x.group() == group))
        throw std::invalid_argument("Cokernel::lift: element not in " + group.to_string());
    const auto coords = x.generator_coords();
    return section.apply(coords);
}

DirectSum direct_sum_with_maps(const FgAbGroup& g, const FgAbGroup& h)
{
    const std::size_t ng = g.generator_count();
    const std::size_t total = ng + h.generator_count();
    const std::size_t relations = g.torsion().size() + h.torsion().size();
    IntegerMatrix rel(total, relations);
    std::size_t col = 0;
    for (std::size_t i = 0; i < g.torsion().size(); ++i)
        rel(g.free_rank() + i, col++) = g.torsion()[i];
    for (std::size_t i = 0; i < h.torsion().size(); ++i)
        rel(ng + h.free_rank() + i, col++) = h.torsion()[i];
    auto map = cokernel_with_map(rel);
    FgAbGroup group = map.group;
    return DirectSum{g, h, std::move(group), std::move(map)};
}

GroupElement DirectSum::pair(const GroupElement& x, const GroupElement& y) const
{
    if (!(x.group() == first) || !(y.group() == second))
        throw std::invalid_argument("DirectSum::pair: summand mismatch");
    auto ambient = x.generator_coords();
    const auto b = y.generator_coords();
    ambient.insert(ambient.end(), b.begin(), b.end());
    return map.project(ambient);
}

GroupElement DirectSum::include_first(const GroupElement& x) const { return pair(x, GroupElement::zero(second)); }

GroupElement DirectSum::include_second(const GroupElement& y) const { return pair(GroupElement::zero(first), y); }

/****************************************************
 *               Coefficient reduction
 ***************************************************/

Reduction::Reduction(FgAbGroup source, Integer modulus) : source_(std::move(source)), modulus_(std::move(modulus))
{
    if (modulus_ < 2)
        throw std::invalid_argument("Reduction: modulus must be at least 2");
    std::vector<Integer> orders;
    for (const auto& d : source_.torsion()) {
        const Integer e = gcd(d, modulus_);
        if (e >= 2) {
            slot_.push_back(static_cast<long>(orders.size()));
            orders.push_back(e);
        }
        else {
            slot_.push_back(-1);
        }
    }
    std::vector<long> free_slots;
    for (std::size_t i = 0; i < source_.free_rank(); ++i) {
        free_slots.push_back(static_cast<long>(orders.size()));
        orders.push_back(modulus_);
    }
    // Source generators are ordered free first.
    slot_.insert(slot_.begin(), free_slots.begin(), free_slots.end());
    target_ = FgAbGroup(0, std::move(orders));
}

GroupElement Reduction::apply(const GroupElement& x) const
{
    if (!(x.group() == source_))
        throw std::invalid_argument("Reduction::apply: element not in " + source_.to_string());
    const auto coords = x.generator_coords();
    std::vector<Integer> out(target_.generator_count(), 0);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (slot_[i] >= 0)
            out[static_cast<std::size_t>(slot_[i])] = coords[i];
    return GroupElement::from_generator_coords(target_, out);
}

GroupElement Reduction::lift(const GroupElement& y) const
{
    if (!(y.group() == target_))
        throw std::invalid_argument("Reduction::lift: element not in " + target_.to_string());
    const auto coords = y.generator_coords();
    std::vector<Integer> out(source_.generator_count(), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        if (slot_[i] >= 0)
            out[i] = coords[static_cast<std::size_t>(slot_[i])];
    return GroupElement::from_generator_coords(source_, out);
}

}  // namespace so3
