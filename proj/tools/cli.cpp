#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylfac/homogfac.hpp"
#include "weylfac/parser.hpp"

namespace weylfac::cli {

namespace {

using json = nlohmann::json;

struct Options {
    std::string algebra = "weyl";
    std::string q;
    bool json = false;
    bool all = false;
    bool verify_off = false;
    std::string expr;
    std::string suite;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json q_field(const AlgebraMode mode, const std::string& value) {
    switch (mode) {
        case AlgebraMode::Weyl: return nullptr;
        case AlgebraMode::QWeylSymbolic: return "q";
        case AlgebraMode::QWeylNumeric: return value;
    }
    return nullptr;
}

std::string algebra_name(AlgebraMode mode) { return mode == AlgebraMode::Weyl ? "weyl" : "qweyl"; }

// Calls fn with the context selected by --algebra and --q.
int with_context(const Options& o, const std::function<int(const AlgebraCtx<Rational>&)>& numeric,
                 const std::function<int(const AlgebraCtx<RatFunc>&)>& symbolic) {
    if (o.algebra == "weyl") {
        if (!o.q.empty() && !Rational::parse(o.q).is_one()) throw UsageError("--q is only allowed with --algebra qweyl (or q = 1)");
        return numeric(AlgebraCtx<Rational>::weyl());
    }
    if (o.algebra != "qweyl") throw UsageError("unknown algebra '" + o.algebra + "' (expected weyl or qweyl)");
    if (o.q.empty()) return symbolic(AlgebraCtx<RatFunc>::symbolic());
    Rational q0 = Rational::parse(o.q);
    if (q0.is_zero()) throw UsageError("q must be nonzero");
    return numeric(AlgebraCtx<Rational>::numeric(q0));
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

template <Field F>
void print_list(const Factorization<F>& f, int indent, std::ostream& out) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    std::vector<std::string> entries{f.unit.str()};
    for (const auto& s : f.factor_strings()) entries.push_back(s);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        out << pad << "[" << i + 1 << "]:\n" << pad << "   " << entries[i] << "\n";
    }
}

template <Field F>
int cmd_factor(const Options& o, const AlgebraCtx<F>& ctx, std::ostream& out, std::ostream& err) {
    WeylPoly<F> h = parse_poly(o.expr, ctx);
    auto start = std::chrono::steady_clock::now();
    std::vector<Factorization<F>> facs;
    if (o.all) {
        facs = homogfac_all(h);
    } else {
        facs.push_back(homogfac(h));
    }
    double ms = elapsed_ms(start);
    bool verified = std::all_of(facs.begin(), facs.end(), [](const auto& f) { return f.verified; });
    if (!verified) {
        err << "internal error: a factorization does not re-multiply to the input\n";
        if (!o.verify_off) return kVerification;
    }
    if (o.json) {
        json rec;
        rec["input"] = o.expr;
        rec["algebra"] = algebra_name(ctx.mode());
        rec["q"] = q_field(ctx.mode(), ctx.q().str());
        rec["factorizations"] = json::array();
        for (const auto& f : facs) rec["factorizations"].push_back({{"unit", f.unit.str()}, {"factors", f.factor_strings()}});
        rec["ms"] = ms;
        rec["verified"] = verified;
        out << rec.dump(2) << "\n";
        return kOk;
    }
    if (o.all) {
        for (std::size_t i = 0; i < facs.size(); ++i) {
            out << "[" << i + 1 << "]:\n";
            print_list(facs[i], 3, out);
        }
    } else {
        print_list(facs[0], 0, out);
    }
    return kOk;
}

template <Field F>
int cmd_expand(const Options& o, const AlgebraCtx<F>& ctx, std::ostream& out) {
    WeylPoly<F> h = parse_poly(o.expr, ctx);
    if (o.json) {
        json rec;
        rec["input"] = o.expr;
        rec["algebra"] = algebra_name(ctx.mode());
        rec["q"] = q_field(ctx.mode(), ctx.q().str());
        rec["result"] = h.str();
        out << rec.dump(2) << "\n";
    } else {
        out << h.str() << "\n";
    }
    return kOk;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

struct SuiteCase {
    std::string name;
    std::string expr;
    std::size_t expected;
};

std::vector<SuiteCase> read_suite(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open suite file '" + path + "'");
    std::vector<SuiteCase> cases;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto a = t.find(';');
        auto b = a == std::string::npos ? a : t.find(';', a + 1);
        if (b == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected 'name ; expression ; count'");
        SuiteCase c{trim(t.substr(0, a)), trim(t.substr(a + 1, b - a - 1)), 0};
        try {
            c.expected = std::stoul(trim(t.substr(b + 1)));
        } catch (const std::exception&) {
            throw UsageError(path + ":" + std::to_string(lineno) + ": bad expected count");
        }
        cases.push_back(std::move(c));
    }
    return cases;
}

template <Field F>
int cmd_bench(const Options& o, const AlgebraCtx<F>& ctx, std::ostream& out, std::ostream& err) {
    auto cases = read_suite(o.suite);
    int status = kOk;
    json report = json::array();
    for (const auto& c : cases) {
        WeylPoly<F> h = parse_poly(c.expr, ctx);
        auto start = std::chrono::steady_clock::now();
        auto facs = homogfac_all(h);
        double ms = elapsed_ms(start);
        bool verified = std::all_of(facs.begin(), facs.end(), [](const auto& f) { return f.verified; });
        bool ok = facs.size() == c.expected;
        if (!verified) {
            err << c.name << ": verification failed\n";
            if (!o.verify_off) status = kVerification;
        }
        if (!ok && status == kOk) status = kBenchMismatch;
        if (o.json) {
            report.push_back({{"name", c.name}, {"expected", c.expected}, {"count", facs.size()}, {"ms", ms}, {"verified", verified}, {"ok", ok}});
        } else {
            std::ostringstream line;
            line.setf(std::ios::fixed);
            line.precision(1);
            line << c.name << ": " << facs.size() << " fcts (expected " << c.expected << "), " << ms << " ms, "
                 << (ok ? "ok" : "MISMATCH") << (verified ? "" : ", UNVERIFIED");
            out << line.str() << "\n" << std::flush;
        }
    }
    if (o.json) out << report.dump(2) << "\n";
    return status;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--algebra", o.algebra, "weyl or qweyl")->check(CLI::IsMember({"weyl", "qweyl"}));
    sub->add_option("--q", o.q, "numeric value for q (rational, nonzero); symbolic q if omitted");
    sub->add_flag("--json", o.json, "emit JSON");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Factorization of graded polynomials in the first Weyl and q-Weyl algebras", "weylfac"};
    app.require_subcommand(1);
    Options o;

    auto* factor = app.add_subcommand("factor", "factor a homogeneous polynomial");
    add_common(factor, o);
    factor->add_flag("--all", o.all, "all factorizations up to units");
    factor->add_flag("--verify-off", o.verify_off, "report instead of failing when verification fails");
    factor->add_option("expr", o.expr, "polynomial, e.g. \"x3d3+4x2d2+3xd\"")->required();

    auto* expand = app.add_subcommand("expand", "print the normal form");
    add_common(expand, o);
    expand->add_option("expr", o.expr, "polynomial")->required();

    auto* bench = app.add_subcommand("bench", "factor every case of a suite and compare counts");
    add_common(bench, o);
    bench->add_flag("--verify-off", o.verify_off, "report instead of failing when verification fails");
    bench->add_option("suite", o.suite, "suite file: name ; factored-expression ; expected-count")->required();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (factor->parsed()) {
            return with_context(
                o, [&](const auto& ctx) { return cmd_factor(o, ctx, out, err); },
                [&](const auto& ctx) { return cmd_factor(o, ctx, out, err); });
        }
        if (expand->parsed()) {
            return with_context(
                o, [&](const auto& ctx) { return cmd_expand(o, ctx, out); },
                [&](const auto& ctx) { return cmd_expand(o, ctx, out); });
        }
        return with_context(
            o, [&](const auto& ctx) { return cmd_bench(o, ctx, out, err); },
            [&](const auto& ctx) { return cmd_bench(o, ctx, out, err); });
    } catch (const InhomogeneousError& e) {
        err << "error: " << e.what() << "\n";
        return kInhomogeneous;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ZeroPolynomialError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace weylfac::cli
