#include "so3/cli.hpp"

#include "so3/recipe.hpp"
#include "so3/reproduce.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace so3::cli {

namespace {

struct Options
{
    std::string format = "text";
    std::string file;
    std::string catalog_name;
    std::string criterion = "atiyah";
    std::string w2;
    std::string p1;
    std::string target;
    std::string show_name;
};

class UsageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in)
{
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

ManifoldProfile load_input(const Options& o)
{
    if (o.file.empty() == o.catalog_name.empty())
        throw UsageError("give exactly one of FILE or --catalog NAME");
    if (!o.catalog_name.empty()) {
        try {
            return catalog(o.catalog_name);
        }
        catch (const std::invalid_argument& e) {
            throw SchemaError(e.what());
        }
    }
    std::string text;
    if (o.file == "-") {
        text = read_all(std::cin);
    }
    else {
        std::ifstream in(o.file);
        if (!in)
            throw SchemaError("cannot read '" + o.file + "'");
        text = read_all(in);
    }
    return parse_recipe(parse_json_text(text));
}

std::vector<std::string> split(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        }
        else if (ch != ' ') {
            cur += ch;
        }
    }
    if (!cur.empty() || !out.empty())
        out.push_back(cur);
    return out;
}

Mod2Vector parse_bits(const std::string& s)
{
    Mod2Vector v;
    for (const auto& t : split(s)) {
        if (t != "0" && t != "1")
            throw UsageError("--w2 expects comma-separated 0/1 entries, got '" + s + "'");
        v.push_back(t == "1" ? 1 : 0);
    }
    return v;
}

std::vector<Integer> parse_integers(const std::string& s, const std::string& what)
{
    std::vector<Integer> v;
    for (const auto& t : split(s)) {
        Integer x;
        if (t.empty() || x.set_str(t, 10) != 0)
            throw UsageError(what + " expects comma-separated integers, got '" + s + "'");
        v.push_back(x);
    }
    return v;
}

std::string pad(std::string s, std::size_t width)
{
    if (s.size() < width)
        s.append(width - s.size(), ' ');
    return s;
}

std::string bits_string(const Mod2Vector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

const Coefficients all_rings[] = {Coefficients::Z, Coefficients::Z2, Coefficients::Z4, Coefficients::Z5, Coefficients::Z10,
                                  Coefficients::R};

Json invariants_json(const ManifoldProfile& m)
{
    Json coh = Json::object();
    for (auto r : all_rings) {
        Json groups = Json::array();
        for (int k = 0; k <= 5; ++k)
            groups.push_back(to_json(cohomology(m, k, r)));
        coh[to_string(r)] = groups;
    }
    Json h2 = Json::array();
    for (int k = 0; k <= 5; ++k)
        h2.push_back(to_json(homology(m, k, Coefficients::Z2)));
    return Json{{"profile", to_json(m)},
                {"cohomology", coh},
                {"homology_Z2", h2},
                {"semicharacteristic", semicharacteristic(m)},
                {"kervaire_semicharacteristic", kervaire_semicharacteristic(m)},
                {"semicharacteristic_difference", semicharacteristic_difference(m)}};
}

void print_invariants(const ManifoldProfile& m, const Options& o, std::ostream& out)
{
    if (o.format == "json") {
        out << canonical(invariants_json(m));
        return;
    }
    out << "name: " << m.name << "\n";
    const std::size_t w = 16;
    out << "  " << pad("k", 4) << pad("H_k(M;Z)", w) << pad("H^k(M;Z)", w) << pad("H_k(M;Z2)", w) << "H^k(M;Z4)\n";
    for (int k = 0; k <= 5; ++k)
        out << "  " << pad(std::to_string(k), 4) << pad(m.homology[k].to_string(), w)
            << pad(cohomology(m, k, Coefficients::Z).to_string(), w) << pad(homology(m, k, Coefficients::Z2).to_string(), w)
            << cohomology(m, k, Coefficients::Z4).to_string() << "\n";
    out << "spin: " << yes_no(m.spin) << "\n";
    out << "w4 = 0: " << yes_no(m.w4_is_zero) << "\n";
    out << "p1: " << m.p1.to_string() << "\n";
    out << "semi-characteristic chi_hat: " << semicharacteristic(m) << "\n";
    out << "Kervaire semi-characteristic k: " << kervaire_semicharacteristic(m) << "\n";
    out << "t2(H2) mod 2: " << semicharacteristic_difference(m) << "\n";
    if (m.mod2)
        out << "mod 2 fragment: dim H^2(M;Z2) = " << m.mod2->h2_dim << ", w2 = " << bits_string(m.mod2->w2) << "\n";
    else
        out << "mod 2 fragment: none\n";
}

void print_decision(const Decision& d, const Options& o, std::ostream& out)
{
    if (o.format == "json") {
        out << canonical(to_json(d));
        return;
    }
    out << "verdict: " << to_string(d.verdict) << "\n";
    out << "theorem: " << d.theorem << "\n";
    out << "trace:\n";
    for (const auto& s : d.trace)
        out << "  " << (s.ok ? "[ok]   " : "[fail] ") << s.condition << ": " << s.value << "\n";
}

int print_reproduction(const ReproductionReport& r, const Options& o, std::ostream& out)
{
    if (o.format == "json") {
        Json checks = Json::array();
        for (const auto& c : r.checks)
            checks.push_back(Json{{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok()}});
        out << canonical(Json{{"target", r.target}, {"ok", r.ok()}, {"checks", checks}});
    }
    else {
        out << "reproduce " << r.target << "\n";
        std::size_t bad = 0;
        for (const auto& c : r.checks) {
            if (c.ok()) {
                out << "  ok        " << c.name << " = " << c.actual << "\n";
            }
            else {
                ++bad;
                out << "  MISMATCH  " << c.name << ": expected " << c.expected << ", got " << c.actual << "\n";
            }
        }
        out << r.checks.size() << " checks, " << bad << " mismatches\n";
    }
    return r.ok() ? ok : mismatch;
}

void add_input(CLI::App* s, Options& o)
{
    s->add_option("file", o.file, "Profile or recipe JSON ('-' reads stdin)");
    s->add_option("--catalog", o.catalog_name, "Use a catalog entry instead of a file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Invariants and SO(3)-structure decisions for closed oriented 5-manifolds", "so3tool"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* invariants = app.add_subcommand("invariants", "Print homology, cohomology and semi-characteristics");
    add_input(invariants, o);

    auto* decide = app.add_subcommand("decide", "Decide existence of a structure");
    decide->require_subcommand(1);
    auto* irreducible = decide->add_subcommand("irreducible-so3", "Irreducible SO(3)-structure");
    add_input(irreducible, o);
    auto* two_field = decide->add_subcommand("two-field", "Two linearly independent vector fields");
    add_input(two_field, o);
    two_field->add_option("--criterion", o.criterion, "thomas (spin only) or atiyah")
        ->check(CLI::IsMember({"thomas", "atiyah"}));
    auto* standard = decide->add_subcommand("standard-so3", "Standard SO(3)-structure");
    add_input(standard, o);

    auto* bundle = app.add_subcommand("bundle", "Vector bundle existence");
    bundle->require_subcommand(1);
    auto* rank3 = bundle->add_subcommand("rank3", "Rank 3 bundle with prescribed w2 and p1");
    add_input(rank3, o);
    rank3->add_option("--w2", o.w2, "w2 in the fragment basis of H^2(M;Z2), e.g. 1,0,1")->required();
    rank3->add_option("--p1", o.p1, "p1 as generator coordinates in H^4(M;Z), e.g. 0")->required();

    auto* cat = app.add_subcommand("catalog", "Built-in profiles");
    cat->require_subcommand(1);
    auto* list = cat->add_subcommand("list", "List catalog names");
    auto* show = cat->add_subcommand("show", "Show a catalog profile");
    show->add_option("name", o.show_name, "Catalog name")->required();

    auto* repro = app.add_subcommand("reproduce", "Run a golden pipeline against stored expectations");
    repro->add_option("target", o.target, "prop1.7 or sec5")->required()->check(CLI::IsMember(reproduction_targets()));

    for (auto* s : {invariants, decide, irreducible, two_field, standard, bundle, rank3, cat, list, show, repro})
        s->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (invariants->parsed()) {
            print_invariants(load_input(o), o, out);
        }
        else if (irreducible->parsed()) {
            print_decision(decide_irreducible_so3(load_input(o)), o, out);
        }
        else if (two_field->parsed()) {
            const auto c = o.criterion == "thomas" ? TwoFieldCriterion::Thomas : TwoFieldCriterion::Atiyah;
            print_decision(decide_two_field(load_input(o), c), o, out);
        }
        else if (standard->parsed()) {
            print_decision(decide_standard_so3(load_input(o)), o, out);
        }
        else if (rank3->parsed()) {
            const auto m = load_input(o);
            require_valid(m);
            const FgAbGroup h4 = cohomology(m, 4, Coefficients::Z);
            const auto coords = parse_integers(o.p1, "--p1");
            if (coords.size() != h4.generator_count())
                throw UsageError("--p1 needs " + std::to_string(h4.generator_count()) + " coordinates for H^4(M;Z) = " + h4.to_string());
            const auto w = parse_bits(o.w2);
            const auto& f = require_fragment(m);
            if (w.size() != f.h2_dim)
                throw UsageError("--w2 needs " + std::to_string(f.h2_dim) + " entries (dim H^2(M;Z2))");
            print_decision(rank3_bundle_exists(m, w, GroupElement::from_generator_coords(h4, coords)), o, out);
        }
        else if (list->parsed()) {
            if (o.format == "json")
                out << canonical(Json(catalog_names()));
            else
                for (const auto& n : catalog_names())
                    out << n << "\n";
        }
        else if (show->parsed()) {
            ManifoldProfile m;
            try {
                m = catalog(o.show_name);
            }
            catch (const std::invalid_argument& e) {
                throw SchemaError(e.what());
            }
            print_invariants(m, o, out);
        }
        else if (repro->parsed()) {
            return print_reproduction(reproduce(o.target), o, out);
        }
        return ok;
    }
    catch (const InvalidProfile& e) {
        const std::string what = e.what();
        err << what.substr(0, what.find(':')) << ":\n";
        for (const auto& v : e.violations())
            err << "  - " << v << "\n";
        return invalid_profile;
    }
    catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage_error;
    }
    catch (const SchemaError& e) {
        err << "input error: " << e.what() << "\n";
        return usage_error;
    }
    catch (const CriterionInapplicable& e) {
        err << e.what() << "\n";
        return usage_error;
    }
    catch (const InsufficientRingData& e) {
        err << e.what() << "\n";
        return usage_error;
    }
    catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
}

}  // namespace so3::cli
