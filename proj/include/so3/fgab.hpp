#pragma once

// Exact arithmetic on finitely generated abelian groups.
//
// Every group is kept in invariant-factor form Z^r + Z_{d1} + ... + Z_{dk}
// with 2 <= d1 | d2 | ... | dk, so structural equality is isomorphism.
// Elements carry their group by value and are reduced on construction.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace so3 {

using Integer = mpz_class;

class IntegerMatrix
{
  public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
    static IntegerMatrix column(std::span<const Integer> entries);
    static IntegerMatrix diagonal(std::span<const Integer> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    IntegerMatrix transpose() const;
    std::vector<Integer> apply(std::span<const Integer> x) const;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    // Fraction-free (Bareiss) elimination; exact for any square matrix.
    Integer determinant() const;

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) = default;

    std::string to_string() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

// u * a * v == d, with u and v unimodular and d diagonal with a
// nonnegative divisibility chain. u_inverse is carried along so that
// cokernel coordinates can be lifted back to the ambient lattice.
struct SnfDecomposition
{
    IntegerMatrix u;
    IntegerMatrix d;
    IntegerMatrix v;
    IntegerMatrix u_inverse;

    std::vector<Integer> diagonal() const;
};

SnfDecomposition smith_normal_form(const IntegerMatrix& a);

class FgAbGroup
{
  public:
    FgAbGroup() = default;

    // Requires canonical input; throws std::invalid_argument otherwise.
    FgAbGroup(std::size_t free_rank, std::vector<Integer> torsion);

    // Accepts any list of cyclic orders: 0 contributes a free summand,
    // +-1 is dropped, everything else is merged into invariant factors.
    static FgAbGroup from_cyclic_orders(std::size_t free_rank, std::span<const Integer> orders);
    static FgAbGroup free(std::size_t rank) { return FgAbGroup(rank, {}); }
    static FgAbGroup cyclic(const Integer& order);
    static FgAbGroup trivial() { return FgAbGroup(); }

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Integer>& torsion() const { return torsion_; }
    std::size_t generator_count() const { return free_rank_ + torsion_.size(); }

    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }
    bool is_free() const { return torsion_.empty(); }
    FgAbGroup torsion_subgroup() const { return FgAbGroup(0, torsion_); }
    FgAbGroup free_part() const { return FgAbGroup(free_rank_, {}); }

    // Order of a finite group; throws std::domain_error for infinite groups.
    Integer order() const;

    // "0", "Z", "Z^2 + Z_3 + Z_6", ...
    std::string to_string() const;

    friend bool operator==(const FgAbGroup& a, const FgAbGroup& b) = default;

  private:
    std::size_t free_rank_ = 0;
    std::vector<Integer> torsion_;
};

class GroupElement
{
  public:
    GroupElement() = default;
    GroupElement(FgAbGroup group, std::vector<Integer> free_coords, std::vector<Integer> torsion_coords);

    static GroupElement zero(const FgAbGroup& group);
    // Coordinates with respect to the canonical generators, free ones first.
    static GroupElement from_generator_coords(const FgAbGroup& group, std::span<const Integer> coords);

    const FgAbGroup& group() const { return group_; }
    const std::vector<Integer>& free_coords() const { return free_; }
    const std::vector<Integer>& torsion_coords() const { return torsion_; }
    std::vector<Integer> generator_coords() const;

    bool is_zero() const;
    std::string to_string() const;

    friend bool operator==(const GroupElement& a, const GroupElement& b) = default;

  private:
    FgAbGroup group_;
    std::vector<Integer> free_;
    std::vector<Integer> torsion_;
};

GroupElement add(const GroupElement& x, const GroupElement& y);
GroupElement negate(const GroupElement& x);
GroupElement scale(const Integer& k, const GroupElement& x);
inline bool is_zero(const GroupElement& x) { return x.is_zero(); }

inline GroupElement operator+(const GroupElement& x, const GroupElement& y) { return add(x, y); }
inline GroupElement operator-(const GroupElement& x) { return negate(x); }
inline GroupElement operator-(const GroupElement& x, const GroupElement& y) { return add(x, negate(y)); }
inline GroupElement operator*(const Integer& k, const GroupElement& x) { return scale(k, x); }

// Some y with n*y == x, or nullopt when x is not divisible by n.
std::optional<GroupElement> solve_divisibility(const GroupElement& x, const Integer& n);

// True iff the group has an element of exact order n. Intended for prime
// powers; for general n the per-prime-power criterion is applied.
bool has_element_of_order(const FgAbGroup& g, const Integer& n);

// dim_{F_p} (G tensor Z_p).
std::size_t mod_p_dimension(const FgAbGroup& g, const Integer& p);

FgAbGroup direct_sum(const FgAbGroup& g, const FgAbGroup& h);
FgAbGroup tensor(const FgAbGroup& g, const FgAbGroup& h);
FgAbGroup tor(const FgAbGroup& g, const FgAbGroup& h);
FgAbGroup hom(const FgAbGroup& g, const FgAbGroup& h);
FgAbGroup ext(const FgAbGroup& g, const FgAbGroup& h);

// Z^rows / image(a), in canonical form.
FgAbGroup cokernel(const IntegerMatrix& a);

// Cokernel together with the quotient map from the ambient lattice Z^rows
// and a section sending each canonical generator to an ambient lift.
struct Cokernel
{
    FgAbGroup group;
    IntegerMatrix projection;  // generator_count x rows
    IntegerMatrix section;     // rows x generator_count

    GroupElement project(std::span<const Integer> ambient) const;
    std::vector<Integer> lift(const GroupElement& x) const;
};

Cokernel cokernel_with_map(const IntegerMatrix& a);

// The canonical direct sum of two groups with both inclusions.
struct DirectSum
{
    FgAbGroup first;
    FgAbGroup second;
    FgAbGroup group;
    Cokernel map;  // ambient = generators of the first summand, then the second

    GroupElement include_first(const GroupElement& x) const;
    GroupElement include_second(const GroupElement& y) const;
    GroupElement pair(const GroupElement& x, const GroupElement& y) const;
};

DirectSum direct_sum_with_maps(const FgAbGroup& g, const FgAbGroup& h);

// Coefficient reduction G -> G tensor Z_m for m >= 2. The target is laid out
// as Z_{gcd(d1,m)} + ... + Z_{gcd(dk,m)} + (Z_m)^r with trivial factors
// dropped, which is already canonical.
class Reduction
{
  public:
    Reduction(FgAbGroup source, Integer modulus);

    const FgAbGroup& source() const { return source_; }
    const FgAbGroup& target() const { return target_; }
    const Integer& modulus() const { return modulus_; }

    GroupElement apply(const GroupElement& x) const;
    // Some preimage in the source group.
    GroupElement lift(const GroupElement& y) const;

  private:
    FgAbGroup source_;
    Integer modulus_;
    FgAbGroup target_;
    // For each source generator: index into the target generators, or -1.
    std::vector<long> slot_;
};

Integer gcd(const Integer& a, const Integer& b);
Integer content(std::span<const Integer> v);

}  // namespace so3
