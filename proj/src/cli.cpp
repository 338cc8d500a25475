#include "rlk/cli.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "rlk/fiblinks.hpp"
#include "rlk/links.hpp"
#include "rlk/lissajous.hpp"
#include "rlk/notation.hpp"
#include "rlk/poly.hpp"
#include "rlk/render.hpp"
#include "rlk/verify.hpp"

namespace rlk {

namespace {

Fraction parse_fraction_text(const std::string& text) {
    if (text == "inf") return Fraction::infinity();
    std::size_t slash = text.find('/');
    std::string num_text = slash == std::string::npos ? text : text.substr(0, slash);
    std::string den_text = slash == std::string::npos ? "1" : text.substr(slash + 1);
    Int num, den;
    try {
        num = Int(num_text, 10);
        den = Int(den_text, 10);
    } catch (const std::invalid_argument&) {
        throw std::domain_error("cannot parse fraction '" + text +
                                "'; expected <alpha>/<beta> or inf");
    }
    if (num < 1)
        throw std::domain_error("fraction " + text +
                                ": alpha must be >= 1 (not a canonical Schubert fraction)");
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1)
        throw std::domain_error("fraction " + text +
                                ": alpha and beta must be coprime "
                                "(not a canonical Schubert fraction)");
    return Fraction(num, den);
}

void parse_range(const std::string& text, int& lo, int& hi) {
    std::size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw std::domain_error("cannot parse range '" + text + "'; expected a..b");
    }
    if (lo > hi) throw std::domain_error("empty range '" + text + "'");
}

// Expansion backing the conway/alexander commands: the notation itself when
// it is already all-even, otherwise an even expansion of its link class.
struct CliExpansion {
    Fraction fraction;
    ContinuedFraction quotients;
    Fraction expanded;
    bool direct = false;
    bool s_applied = false;
    bool representative = false;
};

CliExpansion expand_notation(const ContinuedFraction& cf) {
    RationalLink link(cf);
    CliExpansion out;
    out.fraction = link.fraction();
    if (cf.all_even_nonzero()) {
        out.quotients = cf;
        out.expanded = out.fraction;
        out.direct = true;
        return out;
    }
    LinkExpansion e = link_even_expansion(link.fraction());
    out.quotients = std::move(e.quotients);
    out.expanded = std::move(e.expanded);
    out.s_applied = e.s_applied;
    out.representative = e.representative;
    return out;
}

void describe_expansion(std::ostream& out, const CliExpansion& e) {
    out << "expansion: " << to_text(e.quotients);
    if (e.direct) {
        out << " (the notation itself)";
    } else {
        out << " (evaluates to " << e.expanded.str();
        if (e.representative) out << ", an equivalent representative";
        else if (e.s_applied) out << ", the s-transform image";
        out << ")";
    }
    out << "\n";
}

const char* kTwoComponentNote =
    "for a two-component link the integer conway polynomial depends on the "
    "even expansion used; only knots have an expansion-independent mod-2 image";

// One atlas row; also the payload of `fib`.
struct FibRecord {
    FibLinkParams params;
    Fraction fraction;
    int components;
    FibExpansion expansion;
    IntPoly conway;
    GF2Poly conway_mod2;
    ClosedFormN closed;
    GF2Poly closed_poly;
    bool match;
    std::string lissajous;  // "obstructed" / "inconclusive" / "n/a"
};

FibRecord make_record(const FibLinkParams& params) {
    RationalLink link = fib_link(params);
    FibRecord rec{params,
                  link.fraction(),
                  link.components(),
                  even_form(params),
                  IntPoly(),
                  GF2Poly(),
                  closed_form_index(params),
                  mod2_closed_form(params),
                  false,
                  "n/a"};
    rec.conway = conway_polynomial(rec.expansion.quotients);
    rec.conway_mod2 = mod2(rec.conway);
    rec.match = rec.conway_mod2 == rec.closed_poly;
    if (rec.components == 1) rec.lissajous = to_string(obstruction(link).status);
    return rec;
}

json record_json(const FibRecord& rec) {
    return json{{"n", rec.params.n},
                {"j", rec.params.j},
                {"alpha", to_json(rec.fraction.num())},
                {"beta", to_json(rec.fraction.den())},
                {"components", rec.components},
                {"expansion", to_json(rec.expansion.quotients)},
                {"s_applied", rec.expansion.s_applied},
                {"route", to_string(rec.expansion.route)},
                {"conway", to_json(rec.conway)},
                {"conway_mod2", to_json(rec.conway_mod2)},
                {"N", static_cast<std::int64_t>(rec.closed.N)},
                {"closed_form", to_json(rec.closed_poly)},
                {"match", rec.match},
                {"lissajous", rec.lissajous}};
}

void record_csv_row(std::ostream& out, const FibRecord& rec) {
    out << rec.params.n << ',' << rec.params.j << ',' << rec.fraction.num().get_str() << ','
        << rec.fraction.den().get_str() << ',' << rec.components << ','
        << to_plain_text(rec.expansion.quotients) << ',' << to_text(rec.conway) << ','
        << to_text(rec.conway_mod2) << ',' << rec.closed.N << ',' << to_text(rec.closed_poly)
        << ',' << (rec.match ? "true" : "false") << ',' << rec.lissajous << '\n';
}

const char* kCsvHeader =
    "n,j,alpha,beta,components,expansion,conway,conway_mod2,N,closed_form,match,lissajous";

void record_text(std::ostream& out, const FibRecord& rec) {
    out << "n: " << rec.params.n << "\n";
    out << "j: " << rec.params.j << "\n";
    out << "fraction: " << rec.fraction.str() << "\n";
    out << "determinant: " << rec.fraction.num().get_str() << "\n";
    out << "components: " << rec.components << "\n";
    out << "expansion: " << to_text(rec.expansion.quotients) << " (route: "
        << to_string(rec.expansion.route)
        << (rec.expansion.s_applied ? ", of the s-transform image " : ", evaluates to ")
        << rec.expansion.expanded.str() << ")\n";
    out << "conway: " << to_text(rec.conway) << "\n";
    if (rec.components == 2) out << "note: " << kTwoComponentNote << "\n";
    out << "conway mod 2: " << to_text(rec.conway_mod2) << "\n";
    out << "closed form: f_" << rec.closed.N << " mod 2 = " << to_text(rec.closed_poly) << "\n";
    out << "match: " << (rec.match ? "yes" : "no") << "\n";
    out << "lissajous: " << rec.lissajous << "\n";
}

int run_verify(int max_n, int max_j, std::ostream& out) {
    VerifyOptions options;
    options.max_n = max_n;
    options.max_j = max_j;
    std::vector<CheckResult> results = run_verification(options);
    std::size_t passed = 0;
    for (const CheckResult& r : results) {
        out << (r.pass() ? "[PASS] " : "[FAIL] ") << r.name << " — " << r.cases << " cases";
        if (!r.pass()) out << ", " << r.failures << " failed; first: " << r.detail;
        out << "\n";
        if (r.pass()) ++passed;
    }
    out << passed << " of " << results.size() << " checks passed\n";
    return passed == results.size() ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact invariants of rational (two-bridge) knots and links", "rlk"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string notation_text, fraction_text, n_range = "1..1", j_range = "1..1";
    int fib_n = 1, fib_j = 1, max_n = 9, max_j = 15;

    const auto add_format = [&format](CLI::App* cmd, bool with_csv) {
        std::vector<std::string> formats = {"text", "json"};
        if (with_csv) formats.push_back("csv");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember(formats))
            ->capture_default_str();
    };

    CLI::App* cmd_fraction =
        app.add_subcommand("fraction", "Schubert fraction of a twist notation");
    cmd_fraction->add_option("notation", notation_text, "e.g. \"C(2,3,-2)\" or \"[2,3,-2]\"")
        ->required();
    add_format(cmd_fraction, false);

    CLI::App* cmd_normalize =
        app.add_subcommand("normalize", "all-even expansion of a Schubert fraction");
    cmd_normalize->add_option("fraction", fraction_text, "<alpha>/<beta>, e.g. 10/3")
        ->required();
    add_format(cmd_normalize, false);

    CLI::App* cmd_conway = app.add_subcommand("conway", "Conway polynomial of a notation");
    cmd_conway->add_option("notation", notation_text, "twist notation")->required();
    add_format(cmd_conway, false);

    CLI::App* cmd_alexander =
        app.add_subcommand("alexander", "Alexander polynomial of a knot notation");
    cmd_alexander->add_option("notation", notation_text, "twist notation")->required();
    add_format(cmd_alexander, false);

    CLI::App* cmd_fib =
        app.add_subcommand("fib", "full invariant record of the link C(n, ..., n)");
    cmd_fib->add_option("--n", fib_n, "twist value, >= 1")->required();
    cmd_fib->add_option("--j", fib_j, "number of twist regions, >= 1")->required();
    add_format(cmd_fib, false);

    CLI::App* cmd_table = app.add_subcommand("table", "atlas rows over n and j ranges");
    cmd_table->add_option("--n-range", n_range, "a..b")->required();
    cmd_table->add_option("--j-range", j_range, "c..d")->required();
    add_format(cmd_table, true);

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "replay the full identity suite; exit 0 iff all pass");
    cmd_verify->add_option("--max-n", max_n, "sweep bound for n")->capture_default_str();
    cmd_verify->add_option("--max-j", max_j, "sweep bound for j")->capture_default_str();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*cmd_fraction) {
            Fraction f = RationalLink(parse_notation(notation_text)).fraction();
            if (format == "json")
                out << json{{"fraction", f.str()},
                            {"alpha", to_json(f.num())},
                            {"beta", to_json(f.den())}}
                           .dump()
                    << "\n";
            else
                out << f.str() << "\n";
        } else if (*cmd_normalize) {
            Fraction f = parse_fraction_text(fraction_text);
            EvenExpansion e = even_expansion(f);
            if (format == "json") {
                out << json{{"input", f.str()},
                            {"s_applied", e.s_applied},
                            {"expanded", e.expanded.str()},
                            {"quotients", to_json(e.quotients)}}
                           .dump()
                    << "\n";
            } else {
                out << "input: " << f.str() << "\n";
                out << "s-transform applied: " << (e.s_applied ? "yes" : "no") << "\n";
                out << "expanded: " << e.expanded.str() << "\n";
                out << "even expansion: " << to_text(e.quotients) << "\n";
            }
        } else if (*cmd_conway) {
            CliExpansion e = expand_notation(parse_notation(notation_text));
            IntPoly nabla = conway_polynomial(e.quotients);
            int components = component_count(e.fraction);
            if (format == "json") {
                json j{{"fraction", e.fraction.str()},
                       {"expansion", to_json(e.quotients)},
                       {"components", components},
                       {"conway", to_json(nabla)}};
                if (components == 2) j["note"] = kTwoComponentNote;
                out << j.dump() << "\n";
            } else {
                out << "fraction: " << e.fraction.str() << "\n";
                describe_expansion(out, e);
                out << "conway: " << to_text(nabla) << "\n";
                if (components == 2) out << "note: " << kTwoComponentNote << "\n";
            }
        } else if (*cmd_alexander) {
            CliExpansion e = expand_notation(parse_notation(notation_text));
            if (component_count(e.fraction) == 2)
                throw std::domain_error(
                    "alexander: " + e.fraction.str() +
                    " is a two-component link (even determinant); the Alexander "
                    "polynomial here is defined for knots only");
            LaurentPoly delta = alexander_polynomial(conway_polynomial(e.quotients));
            if (format == "json") {
                out << json{{"fraction", e.fraction.str()},
                            {"expansion", to_json(e.quotients)},
                            {"alexander", to_json(delta)}}
                           .dump()
                    << "\n";
            } else {
                out << "fraction: " << e.fraction.str() << "\n";
                describe_expansion(out, e);
                out << "alexander: " << to_text(delta) << "\n";
            }
        } else if (*cmd_fib) {
            FibRecord rec = make_record(FibLinkParams(fib_n, fib_j));
            if (format == "json")
                out << record_json(rec).dump() << "\n";
            else
                record_text(out, rec);
        } else if (*cmd_table) {
            int n1, n2, j1, j2;
            parse_range(n_range, n1, n2);
            parse_range(j_range, j1, j2);
            if (n1 < 1 || j1 < 1) throw std::domain_error("table ranges must start at 1");
            if (format == "json") {
                json rows = json::array();
                for (int n = n1; n <= n2; ++n)
                    for (int j = j1; j <= j2; ++j)
                        rows.push_back(record_json(make_record(FibLinkParams(n, j))));
                out << rows.dump() << "\n";
            } else {
                out << kCsvHeader << "\n";
                for (int n = n1; n <= n2; ++n)
                    for (int j = j1; j <= j2; ++j)
                        record_csv_row(out, make_record(FibLinkParams(n, j)));
            }
        } else if (*cmd_verify) {
            return run_verify(max_n, max_j, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace rlk
