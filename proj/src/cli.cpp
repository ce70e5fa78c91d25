#include "mmv/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "mmv/acceptance.hpp"
#include "mmv/engine.hpp"
#include "mmv/errors.hpp"
#include "mmv/lvalues.hpp"
#include "mmv/mzv.hpp"
#include "mmv/numerics.hpp"
#include "mmv/periods.hpp"
#include "mmv/perpoly.hpp"
#include "mmv/relfind.hpp"

namespace mmv::cli {

namespace {

using nlohmann::json;

struct Options {
    int digits = 50;
    std::string format = "text";
    long qterms = 0;
    bool json() const { return format == "json"; }
};

int default_digits() {
    if (const char* env = std::getenv("MMVKIT_DIGITS")) {
        int d = std::atoi(env);
        if (d >= 15 && d <= 1000) return d;
    }
    return 50;
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--digits", opt.digits, "requested decimal digits")
        ->check(CLI::Range(15, 1000))
        ->capture_default_str();
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

std::pair<FormId, FormId> parse_form_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw domain_error("expected two comma-separated forms");
    return {parse_form_id(s.substr(0, comma)), parse_form_id(s.substr(comma + 1))};
}

std::vector<long> parse_longs(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
    return out;
}

json complex_json(const BigComplex& z, int digits) {
    return json::array({z.re().str(digits), z.im().str(digits)});
}

int cmd_lvalue(const std::string& form, long sval, const Options& opt, std::ostream& out) {
    PrecisionContext ctx(opt.digits);
    FormId f = parse_form_id(form);
    BigComplex v = (f.kind == FormKind::Eisenstein) ? lambda_eisenstein(f.weight, sval, ctx).value
                                                    : lambda_cuspform(f, sval, ctx).value;
    if (opt.json())
        out << json{{"form", f.name()}, {"s", sval}, {"value", complex_json(v, opt.digits)}}.dump()
            << "\n";
    else
        out << "Lambda(" << f.name() << "; " << sval << ") = " << v.str(opt.digits) << "\n";
    return 0;
}

int cmd_mmv(const std::string& forms, const std::string& indices, const Options& opt,
            std::ostream& out) {
    PrecisionContext ctx(opt.digits);
    std::vector<long> idx = parse_longs(indices);
    std::vector<std::string> names;
    std::stringstream ss(forms);
    std::string item;
    IterandWord word;
    while (std::getline(ss, item, ',')) names.push_back(item);
    if (names.size() != idx.size()) throw domain_error("forms and indices must have equal length");
    for (size_t i = 0; i < names.size(); ++i)
        word.letters.push_back(Letter{parse_form_id(names[i]), idx[i]});

    EngineContext ec(ctx, opt.qterms);
    MMValue v = lambda_mmv(word, ec);
    std::optional<Rational> rat = rational_reconstruct(v.lambda.re(), ctx.working_digits());
    if (v.lambda.im().log10_abs() > v.lambda.re().log10_abs() - 8) rat.reset();

    if (opt.json()) {
        json j{{"word", indices},
               {"forms", forms},
               {"lambda", complex_json(v.lambda, opt.digits)},
               {"raw_integral", complex_json(v.raw_integral, opt.digits)},
               {"normalization", complex_json(v.normalization, 4)}};
        if (rat) j["exact_rational_match"] = rat->str();
        out << j.dump() << "\n";
    } else {
        out << "Lambda(" << forms << "; " << indices << ") = " << v.lambda.str(opt.digits) << "\n";
        if (rat) out << "  EXACT-RATIONAL-MATCH " << rat->str() << "\n";
    }
    return 0;
}

int cmd_table(const std::string& forms, const Options& opt, std::ostream& out) {
    PrecisionContext ctx(opt.digits);
    auto [f, g] = parse_form_pair(forms);
    EngineContext ec(ctx, opt.qterms);
    auto t = mmv_table(f, g, ec);
    if (opt.json()) {
        json rows = json::array();
        for (const auto& row : t) {
            json r = json::array();
            for (const auto& v : row) r.push_back(complex_json(v.lambda, opt.digits));
            rows.push_back(r);
        }
        out << json{{"forms", forms}, {"table", rows}}.dump() << "\n";
    } else {
        for (long i = 0; i < static_cast<long>(t.size()); ++i)
            for (long j = 0; j < static_cast<long>(t[0].size()); ++j)
                out << "Lambda(" << f.name() << "," << g.name() << ";" << (i + 1) << ","
                    << (j + 1) << ") = "
                    << t[static_cast<size_t>(i)][static_cast<size_t>(j)].lambda.str(opt.digits)
                    << "\n";
    }
    return 0;
}

int cmd_mzv(const std::string& index, const Options& opt, std::ostream& out) {
    PrecisionContext ctx(opt.digits);
    MZVIndex idx{parse_longs(index)};
    BigFloat v = multiple_zeta(idx, ctx);
    if (opt.json())
        out << json{{"index", index}, {"value", v.str(opt.digits)}}.dump() << "\n";
    else
        out << idx.str() << " = " << v.str(opt.digits) << "\n";
    return 0;
}

int cmd_zetarep(const std::string& index, const Options& opt, std::ostream& out) {
    PrecisionContext ctx(opt.digits);
    ZetaRepresentative z = zeta_representative(parse_longs(index), ctx);
    if (opt.json())
        out << json{{"index", index}, {"formula", z.formula}, {"value", z.value.str(opt.digits)}}
                   .dump()
            << "\n";
    else
        out << "zeta_{" << index << "} = " << z.value.str(opt.digits) << "   [" << z.formula
            << "]\n";
    return 0;
}

int cmd_periodpoly(const std::string& form, const Options& opt, std::ostream& out) {
    PrecisionContext ctx(opt.digits);
    FormId f = parse_form_id(form);
    UniPoly<BigComplex> P = period_polynomial(f, ctx);
    json coeffs = json::array();
    for (const auto& c : P.c) coeffs.push_back(complex_json(c, opt.digits));
    if (f == FormId::delta()) {
        ManinSplit ms = manin_split(P, f, std::max(10, ctx.decimal_digits() / 2));
        if (opt.json())
            out << json{{"form", f.name()},
                        {"degree", P.degree()},
                        {"coeffs", coeffs},
                        {"omega_plus", ms.omega_plus.str(opt.digits)},
                        {"omega_minus", ms.omega_minus.str(opt.digits)}}
                       .dump()
                << "\n";
        else {
            out << "P_" << f.name() << " degree " << P.degree() << "\n";
            for (long k = 0; k <= P.degree(); ++k)
                out << "  y^" << k << ": " << P.coeff(k).str(opt.digits) << "\n";
            out << "omega+ = " << ms.omega_plus.str(opt.digits) << "\n";
            out << "omega- = " << ms.omega_minus.str(opt.digits) << "\n";
        }
    } else {
        if (opt.json())
            out << json{{"form", f.name()}, {"degree", P.degree()}, {"coeffs", coeffs}}.dump()
                << "\n";
        else {
            out << "P_" << f.name() << " degree " << P.degree() << "\n";
            for (long k = 0; k <= P.degree(); ++k)
                out << "  y^" << k << ": " << P.coeff(k).str(opt.digits) << "\n";
        }
    }
    return 0;
}

int cmd_deltastack(const std::string& forms, const Options& opt, std::ostream& out) {
    PrecisionContext ctx(opt.digits);
    auto [f, g] = parse_form_pair(forms);
    BiPoly<BigComplex> P = generating_function(f, g, ctx);
    DeltaStack<BigComplex> st = delta_stack(P);
    if (opt.json()) {
        json entries = json::array();
        for (int k = 0; k < static_cast<int>(st.entries.size()); ++k) {
            json coeffs = json::array();
            for (const auto& c : st.entries[static_cast<size_t>(k)].c)
                coeffs.push_back(complex_json(c, opt.digits));
            entries.push_back(json{{"k", k}, {"coeffs", coeffs}});
        }
        out << json{{"forms", forms},
                    {"bidegree", json::array({P.d1, P.d2})},
                    {"entries", entries}}
                   .dump()
            << "\n";
    } else {
        for (int k = 0; k < static_cast<int>(st.entries.size()); ++k) {
            out << "delta^" << k << " P_{" << forms << "}:\n";
            const auto& e = st.entries[static_cast<size_t>(k)];
            for (long m = 0; m <= e.degree(); ++m)
                out << "  y^" << m << ": " << e.coeff(m).str(opt.digits) << "\n";
        }
    }
    return 0;
}

int cmd_decompose(const std::string& forms, bool no_modular, const std::string& height,
                  const Options& opt, std::ostream& out) {
    PrecisionContext ctx(std::max(opt.digits, 280));
    auto [f, g] = parse_form_pair(forms);
    PeriodBasis basis = standard_inventory(ctx, !no_modular);
    auto rels = decompose_delta_stack(f, g, ctx, basis, BigInt(height));
    json entries = json::array();
    for (const auto& r : rels) {
        json terms = json::array();
        for (const auto& [name, q] : r.terms)
            terms.push_back(json{{"name", name}, {"coefficient", q.str()}});
        entries.push_back(json{{"k", r.k},
                               {"power", r.power},
                               {"found", r.found},
                               {"residual_log10", r.residual_log10},
                               {"terms", terms}});
        if (!opt.json()) {
            out << "delta^" << r.k << " y^" << r.power << ": ";
            if (!r.found)
                out << "no relation found at this height/precision\n";
            else if (r.terms.empty())
                out << "0\n";
            else {
                for (size_t i = 0; i < r.terms.size(); ++i)
                    out << (i ? " + " : "") << "(" << r.terms[i].second.str() << ") "
                        << r.terms[i].first;
                out << "\n";
            }
        }
    }
    if (opt.json()) out << json{{"forms", forms}, {"decomposition", entries}}.dump() << "\n";
    return 0;
}

int cmd_findrel(const std::string& basis_file, const std::string& height,
                const std::string& engine, const Options& opt, std::ostream& out) {
    std::ifstream in(basis_file);
    if (!in) throw domain_error("findrel: cannot open basis file " + basis_file);
    json j = json::parse(in);
    PrecisionContext ctx(opt.digits);
    PeriodBasis basis;
    basis.digits = ctx.working_digits();
    for (const auto& e : j)
        basis.push(e.at("name").get<std::string>(),
                   BigFloat(e.at("value").get<std::string>(), ctx.bits()));
    auto rel = find_relation(basis, BigInt(height), ctx,
                             engine == "pslq" ? RelationEngine::PSLQ : RelationEngine::LLL);
    if (!rel) {
        if (opt.json())
            out << json{{"found", false}}.dump() << "\n";
        else
            out << "no relation (certified at this height and precision)\n";
        return 0;
    }
    json coeffs = json::array();
    json names = json::array();
    for (size_t i = 0; i < rel->coefficients.size(); ++i) {
        coeffs.push_back(rel->coefficients[i].str());
        names.push_back(basis.entries[i].name);
    }
    if (opt.json())
        out << json{{"found", true},
                    {"coefficients", coeffs},
                    {"names", names},
                    {"residual", rel->residual.str(8)},
                    {"confidence_margin", rel->confidence_margin}}
                   .dump()
            << "\n";
    else {
        out << "relation:";
        for (size_t i = 0; i < rel->coefficients.size(); ++i)
            out << " " << rel->coefficients[i].str() << "*[" << basis.entries[i].name << "]";
        out << " = 0\nresidual " << rel->residual.str(8) << ", margin 1e"
            << static_cast<int>(std::log10(std::max(1.0, rel->confidence_margin))) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& id, const Options& opt, std::ostream& out) {
    PrecisionContext ctx(opt.digits);
    std::vector<std::string> ids;
    if (id == "all")
        ids = identity_registry();
    else
        ids.push_back(id);
    bool all_ok = true;
    json results = json::array();
    for (const auto& one : ids) {
        IdentityResult r = verify_named_identity(one, ctx);
        all_ok = all_ok && r.ok;
        if (opt.json())
            results.push_back(json{{"id", r.id},
                                   {"label", r.label()},
                                   {"ok", r.ok},
                                   {"agreement_digits", r.agreement_digits},
                                   {"statement", r.statement}});
        else
            out << r.id << ": " << r.label() << " (agreement 1e-"
                << static_cast<int>(r.agreement_digits) << ")\n    " << r.statement << "\n";
    }
    if (opt.json()) out << results.dump() << "\n";
    return all_ok ? 0 : 3;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mmvkit: iterated Eichler integrals, L-values, multiple zeta values and "
                 "integer-relation verification for level-1 modular forms"};
    app.require_subcommand(1);
    Options opt;
    opt.digits = default_digits();

    std::string forms, indices, index, form, id, basis_file;
    std::string engine = "lll";
    std::string height = "1000000";
    long sval = 0;
    bool no_modular = false;

    auto* lv = app.add_subcommand("lvalue", "completed L-value Lambda(f; s)");
    lv->add_option("--form", form, "G4..G22 or Delta")->required();
    lv->add_option("--s", sval, "integer argument")->required();
    add_common(lv, opt);

    auto* mm = app.add_subcommand("mmv", "iterated integral Lambda(f1,...,fr; n1,...,nr)");
    mm->add_option("--forms", forms, "comma-separated forms, nearest 0 first")->required();
    mm->add_option("--indices", indices, "comma-separated indices")->required();
    mm->add_option("--qterms", opt.qterms, "override q-expansion truncation");
    add_common(mm, opt);

    auto* tb = app.add_subcommand("table", "all Lambda(f,g;n1,n2) for a pair");
    tb->add_option("--forms", forms, "pair f,g")->required();
    tb->add_option("--qterms", opt.qterms, "override q-expansion truncation");
    add_common(tb, opt);

    auto* mz = app.add_subcommand("mzv", "multiple zeta value (ascending convention)");
    mz->add_option("--index", index, "comma-separated index, last entry >= 2")->required();
    add_common(mz, opt);

    auto* zr = app.add_subcommand("zetarep", "named representative zeta_{2a+1,2b+1}");
    zr->add_option("--index", index, "odd tuple, e.g. 3,9")->required();
    add_common(zr, opt);

    auto* pp = app.add_subcommand("periodpoly", "period polynomial P_f and omega_pm");
    pp->add_option("--form", form, "G4..G22 or Delta")->required();
    add_common(pp, opt);

    auto* ds = app.add_subcommand("deltastack", "delta^k stack of P_{f,g}");
    ds->add_option("--forms", forms, "pair f,g")->required();
    add_common(ds, opt);

    auto* dc = app.add_subcommand("decompose", "coefficientwise period decomposition of the stack");
    dc->add_option("--forms", forms, "pair f,g")->required();
    dc->add_option("--height", height, "max relation coefficient height");
    dc->add_flag("--no-modular", no_modular, "restrict basis to MZV atoms");
    add_common(dc, opt);

    auto* fr = app.add_subcommand("findrel", "integer relation for a JSON basis file");
    fr->add_option("--basis", basis_file, "JSON [{name, value}]")->required();
    fr->add_option("--height", height, "max coefficient height");
    fr->add_option("--engine", engine, "lll or pslq")->check(CLI::IsMember({"lll", "pslq"}));
    add_common(fr, opt);

    auto* vf = app.add_subcommand("verify", "verify a named identity (or 'all')");
    vf->add_option("--id", id, "identity id")->required();
    add_common(vf, opt);

    auto* st = app.add_subcommand("selftest", "run the full acceptance suite");
    add_common(st, opt);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help() << "\n";
            return 0;
        }
        err << e.what() << "\n" << app.help() << "\n";
        return 64;
    }

    try {
        if (lv->parsed()) return cmd_lvalue(form, sval, opt, out);
        if (mm->parsed()) return cmd_mmv(forms, indices, opt, out);
        if (tb->parsed()) return cmd_table(forms, opt, out);
        if (mz->parsed()) return cmd_mzv(index, opt, out);
        if (zr->parsed()) return cmd_zetarep(index, opt, out);
        if (pp->parsed()) return cmd_periodpoly(form, opt, out);
        if (ds->parsed()) return cmd_deltastack(forms, opt, out);
        if (dc->parsed()) return cmd_decompose(forms, no_modular, height, opt, out);
        if (fr->parsed()) return cmd_findrel(basis_file, height, engine, opt, out);
        if (vf->parsed()) return cmd_verify(id, opt, out);
        if (st->parsed()) {
            auto results = run_acceptance(out, opt.digits);
            return all_passed(results) ? 0 : 3;
        }
    } catch (const pole_error& e) {
        err << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const precision_error& e) {
        err << "insufficient precision: " << e.what() << "\n";
        return 2;
    } catch (const inconsistency_error& e) {
        err << "verification failed: " << e.what() << "\n";
        return 3;
    }
    return 64;
}

} // namespace mmv::cli
