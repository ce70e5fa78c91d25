#include "mmv/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "mmv/engine.hpp"
#include "mmv/lvalues.hpp"
#include "mmv/mzv.hpp"
#include "mmv/numerics.hpp"
#include "mmv/oracles.hpp"
#include "mmv/periods.hpp"
#include "mmv/perpoly.hpp"
#include "mmv/polynomials.hpp"
#include "mmv/relfind.hpp"

namespace mmv {

namespace {

// Accumulates the worst log10 relative deviation over a batch of checks.
struct Check {
    double worst = -1e18;

    void add(const BigComplex& got, const BigComplex& want) {
        BigFloat diff = (got - want).abs();
        BigFloat scale = want.abs();
        double s = std::max(0.0, scale.log10_abs());
        worst = std::max(worst, diff.log10_abs() - s);
    }
    void add(const BigFloat& got, const BigFloat& want) {
        add(BigComplex(got), BigComplex(want));
    }
    void add_abs(const BigFloat& residual) { worst = std::max(worst, residual.log10_abs()); }
    bool within(int tol_digits) const { return worst <= -static_cast<double>(tol_digits); }
    std::string str() const {
        std::ostringstream os;
        os << "worst deviation 1e" << static_cast<int>(worst);
        return os.str();
    }
};

// Expected table value sum_i coeff_i * atom_i over the closed-form atoms
// {1, z3/pi^3, z5/pi^5, z7/pi^7, z3^2/pi^6, z3 z5/pi^8, z(3,5)/pi^8}.
struct Atoms {
    std::vector<BigFloat> a;
    explicit Atoms(const PrecisionContext& ctx) {
        const mpfr_prec_t p = ctx.bits();
        BigFloat pi = BigFloat::pi(p);
        BigFloat z3 = riemann_zeta(3, ctx).re(), z5 = riemann_zeta(5, ctx).re(),
                 z7 = riemann_zeta(7, ctx).re();
        a.push_back(BigFloat(1, p));
        a.push_back(z3 / pow_si(pi, 3));
        a.push_back(z5 / pow_si(pi, 5));
        a.push_back(z7 / pow_si(pi, 7));
        a.push_back(z3 * z3 / pow_si(pi, 6));
        a.push_back(z3 * z5 / pow_si(pi, 8));
        a.push_back(multiple_zeta({3, 5}, ctx) / pow_si(pi, 8));
    }
    BigFloat lin(const std::vector<const char*>& coeffs) const {
        BigFloat v(a[0].precision());
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (std::string(coeffs[i]) == "0") continue;
            v += BigFloat(Rational(coeffs[i]), a[0].precision()) * a[i];
        }
        return v;
    }
};

// Printed closed forms of the two double-Eisenstein tables.
const std::vector<std::vector<const char*>> kTableG4G4 = {
    {"0", "0", "0", "0", "1/128", "0", "0"},
    {"0", "1/1440", "-5/768", "0", "0", "0", "0"},
    {"-209/10368000", "0", "0", "0", "1/64", "0", "0"},
    {"0", "-1/3840", "5/768", "0", "0", "0", "0"},
    {"1/165888", "0", "0", "0", "0", "0", "0"},
    {"0", "1/1440", "-5/768", "0", "0", "0", "0"},
    {"209/10368000", "0", "0", "0", "0", "0", "0"},
    {"0", "-1/3840", "5/768", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "1/128", "0", "0"}};

const std::vector<std::vector<const char*>> kTableG6G4 = {
    {"-503/145152000", "0", "0", "0", "0", "0", "3/320"},
    {"0", "-1/20160", "-1/768", "7/512", "0", "0", "0"},
    {"437/304819200", "0", "0", "0", "1/448", "-3/64", "0"},
    {"0", "1/80640", "0", "-7/1024", "0", "0", "0"},
    {"-107/304819200", "0", "0", "0", "-1/1792", "0", "0"},
    {"0", "1/53760", "-1/1920", "0", "0", "0", "0"},
    {"-1187/914457600", "0", "0", "0", "1/2688", "0", "0"},
    {"0", "-1/24192", "1/3840", "0", "0", "0", "0"},
    {"-1187/914457600", "0", "0", "0", "1/2688", "0", "0"},
    {"0", "1/16128", "-1/1920", "0", "0", "0", "0"},
    {"521/609638400", "0", "0", "0", "-1/1792", "0", "0"},
    {"0", "1/17920", "0", "-7/1024", "0", "0", "0"},
    {"437/304819200", "0", "0", "0", "1/448", "0", "0"},
    {"0", "-1/20160", "0", "7/512", "0", "0", "0"},
    {"-503/145152000", "0", "0", "0", "0", "3/64", "3/320"}};

struct Suite {
    PrecisionContext base;
    EngineContext ec;
    std::vector<CriterionResult> results;
    std::ostream& out;

    Suite(int digits, std::ostream& os) : base(digits), ec(base), out(os) {}

    using TableKey = std::pair<std::string, std::string>;
    std::map<TableKey, std::vector<std::vector<MMValue>>> tables;

    const std::vector<std::vector<MMValue>>& table(const FormId& f, const FormId& g) {
        TableKey key{f.name(), g.name()};
        auto it = tables.find(key);
        if (it != tables.end()) return it->second;
        return tables.emplace(key, mmv_table(f, g, ec)).first->second;
    }

    void report(int number, const std::string& title, bool pass, const std::string& detail) {
        results.push_back({number, title, pass, detail});
        out << "[" << (number < 10 ? " " : "") << number << "/14] "
            << (pass ? "PASS" : "FAIL") << "  " << title << "  (" << detail << ")\n"
            << std::flush;
    }
};

void criterion1(Suite& s) {
    auto t0 = std::chrono::steady_clock::now();
    Check ch;
    const mpfr_prec_t p = s.base.bits();
    for (int w = 4; w <= 12; w += 2) {
        FormId G = FormId::eisenstein(w);
        for (long n = 1; n < w; ++n) {
            BigComplex got = lambda_mmv(IterandWord{{Letter{G, n}}}, s.ec).lambda;
            if (n % 2 == 0) {
                long i = n / 2;
                Rational cf = bernoulli(n) / Rational(n) * bernoulli(w - n) /
                              Rational(w - n) / Rational(2);
                if (i % 2 != 0) cf = -cf;
                ch.add(got, BigComplex(BigFloat(cf, p)));
            } else if (n >= 3 && n <= w - 3) {
                ch.add_abs(got.abs()); // interior odd values vanish
            }
        }
    }
    BigComplex g43 = lambda_mmv(IterandWord{{Letter{FormId::eisenstein(4), 3}}}, s.ec).lambda;
    BigFloat want = -riemann_zeta(3, s.base).re() / pow_si(BigFloat(2, p) * BigFloat::pi(p), 3);
    ch.add(g43, BigComplex(want));
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    s.report(1, "length-one Eisenstein L-values (closed forms, odd zeros, zeta(3) value)",
             ch.within(40), ch.str() + ", " + std::to_string(dt).substr(0, 5) + "s");
}

void criterion2(Suite& s) {
    Atoms atoms(s.base);
    Check ch;
    const auto& t = s.table(FormId::eisenstein(4), FormId::eisenstein(4));
    size_t row = 0;
    for (long i = 1; i <= 3; ++i)
        for (long j = 1; j <= 3; ++j)
            ch.add(t[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)].lambda,
                   BigComplex(atoms.lin(kTableG4G4[row++])));
    s.report(2, "double Eisenstein table Lambda(G4,G4;i,j), all nine printed closed forms",
             ch.within(40), ch.str());
}

void criterion3(Suite& s) {
    Atoms atoms(s.base);
    Check ch;
    const auto& t = s.table(FormId::eisenstein(6), FormId::eisenstein(4));
    size_t row = 0;
    for (long i = 1; i <= 5; ++i)
        for (long j = 1; j <= 3; ++j)
            ch.add(t[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)].lambda,
                   BigComplex(atoms.lin(kTableG6G4[row++])));
    s.report(3, "double Eisenstein table Lambda(G6,G4;i,j), all fifteen printed closed forms",
             ch.within(40), ch.str());
}

void criterion4(Suite& s) {
    auto t0 = std::chrono::steady_clock::now();
    Check ch;
    const FormId G4 = FormId::eisenstein(4), G6 = FormId::eisenstein(6),
                 G8 = FormId::eisenstein(8), G10 = FormId::eisenstein(10), D = FormId::delta();
    const std::vector<std::pair<FormId, FormId>> pairs = {
        {G4, G4}, {G6, G4}, {G4, G8}, {G4, G10}, {G6, G8}, {D, G4}};
    for (const auto& [f, g] : pairs) {
        const auto& fg = s.table(f, g);
        const auto& gf = s.table(g, f);
        for (long i = 1; i < f.weight; ++i)
            for (long j = 1; j < g.weight; ++j) {
                const BigComplex& a = fg[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)].lambda;
                // shuffle
                BigComplex b = gf[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)].lambda;
                BigComplex lf = lambda_mmv(IterandWord{{Letter{f, i}}}, s.ec).lambda;
                BigComplex lg = lambda_mmv(IterandWord{{Letter{g, j}}}, s.ec).lambda;
                ch.add(a + b, lf * lg);
                // reflection, with the (-1)^{(w_f+w_g)/2} sign the printed
                // tables force on the stated swap identity
                BigComplex r = gf[static_cast<size_t>(g.weight - j - 1)]
                                 [static_cast<size_t>(f.weight - i - 1)].lambda;
                if (((f.weight + g.weight) / 2) % 2 != 0) r = -r;
                ch.add(a, r);
            }
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    s.report(4, "shuffle and reflection identities across all computed length-2 pairs",
             ch.within(40), ch.str() + ", " + std::to_string(dt).substr(0, 5) + "s");
}

void criterion5(Suite& s) {
    PrecisionContext ctx(60);
    IdentityResult r = verify_named_identity("gkz12", ctx);
    s.report(5, "GKZ weight-12 double zeta relation (28,150,168; 5197/691)",
             r.ok && r.agreement_digits >= 40,
             r.label() + ", agreement 1e-" + std::to_string(static_cast<int>(r.agreement_digits)));
}

void criterion6(Suite& s) {
    UniPoly<BigComplex> P = period_polynomial(FormId::delta(), s.base);
    ManinSplit ms = manin_split(P, FormId::delta(), 40);
    const mpfr_prec_t p = s.base.bits();
    bool wp_ok = abs(ms.omega_plus - BigFloat("0.114379022438848", p)) < BigFloat("1e-15", p);
    bool wm_ok = abs(ms.omega_minus - BigFloat("0.009269276162370", p)) < BigFloat("1e-15", p);
    Check feq;
    feq.add_abs(reflection_residual(P));
    feq.add_abs(three_term_residual(P));
    std::ostringstream det;
    det << "omega+ = " << ms.omega_plus.str(16) << ", omega- = " << ms.omega_minus.str(16)
        << ", ratio spread 1e" << static_cast<int>(ms.ratio_spread_log10)
        << ", functional equations " << feq.str();
    s.report(6, "period polynomial of Delta: omega_pm, ratio constancy, functional equations",
             wp_ok && wm_ok && ms.ratio_spread_log10 <= -40 && feq.within(40), det.str());
}

void criterion7(Suite& s) {
    IdentityResult r = verify_named_identity("critical-ratio-delta", s.base);
    s.report(7, "critical ratios (Lambda(Delta;3):...:Lambda(Delta;9)) = (14:9:9:14)",
             r.ok && r.agreement_digits >= 40,
             "agreement 1e-" + std::to_string(static_cast<int>(r.agreement_digits)));
}

void criterion8(Suite& s) {
    IdentityResult r = verify_named_identity("legendre-delta", s.base);
    s.report(8, "Legendre relation with printed quasi-periods eta_pm (15-digit constants)",
             r.ok && r.agreement_digits >= 10,
             "agreement 1e-" + std::to_string(static_cast<int>(r.agreement_digits)));
}

void criterion9(Suite& s) {
    IdentityResult r = verify_named_identity("rankin-selberg-12", s.base);
    s.report(9, "Rankin-Selberg: pi^{-1} Lambda(Delta;12) from the (G4,G10) table",
             r.ok && r.agreement_digits >= 40,
             "agreement 1e-" + std::to_string(static_cast<int>(r.agreement_digits)));
}

void criterion10(Suite& s) {
    PrecisionContext ctx(70);
    std::ostringstream det;
    bool ok = true;
    for (const std::string id : {"f93period", "f75period", "f37period"}) {
        IdentityResult r = verify_named_identity(id, ctx);
        ok = ok && r.ok && r.agreement_digits >= 40;
        det << id << " " << r.label() << " 1e-" << static_cast<int>(r.agreement_digits) << "; ";
    }
    EngineContext ec(ctx);
    const mpfr_prec_t p = ctx.bits();
    BigComplex l26 = lambda_mmv(IterandWord{{Letter{FormId::eisenstein(4), 2},
                                             Letter{FormId::eisenstein(10), 6}}}, ec).lambda;
    BigComplex l35 = lambda_mmv(IterandWord{{Letter{FormId::eisenstein(4), 3},
                                             Letter{FormId::eisenstein(10), 5}}}, ec).lambda;
    BigFloat shift(Rational(BigInt(13), BigInt(4096L) * 243 * 25 * 7 * 11), p);
    auto rep = verify_identity(l26 - l35, BigComplex(shift), 40);
    ok = ok && rep.ok;
    det << "rational shift 1e-" << static_cast<int>(rep.agreement_digits);
    s.report(10, "conjectural identities f93period, f75period, f37period, rational shift", ok,
             det.str());
}

void criterion11(Suite& s) {
    std::ostringstream det;
    bool ok = true;
    for (const std::string id : {"transfer-G4G8", "transfer-Delta"}) {
        IdentityResult r = verify_named_identity(id, s.base);
        ok = ok && r.ok && r.agreement_digits >= 35;
        det << id << " 1e-" << static_cast<int>(r.agreement_digits) << "; ";
    }
    s.report(11, "transference identities (Eisenstein triple and Delta)", ok, det.str());
}

void criterion12(Suite& s) {
    auto t0 = std::chrono::steady_clock::now();
    PrecisionContext ctx(70);
    IdentityResult r = verify_named_identity("ihara-takao-modular", ctx);
    bool ok = r.ok && r.agreement_digits >= 35;
    CancellationReport rep = cancellation_check(PrecisionContext(280));
    ok = ok && rep.combination_mzv_only && rep.individual_needs_modular;
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream det;
    det << "identity 1e-" << static_cast<int>(r.agreement_digits) << "; " << rep.summary << ", "
        << std::to_string(dt).substr(0, 5) << "s";
    s.report(12, "modular Ihara-Takao relation and c(Delta;12) cancellation", ok, det.str());
}

void criterion13(Suite& s) {
    auto one_run = [](int digits) {
        PrecisionContext ctx(digits);
        EngineContext ec(ctx);
        BigComplex l11 = lambda_mmv(IterandWord{{Letter{FormId::eisenstein(4), 1},
                                                 Letter{FormId::eisenstein(4), 1}}}, ec).lambda;
        BigFloat z3 = riemann_zeta(3, ctx).re();
        PeriodBasis b;
        b.digits = ctx.working_digits();
        b.push("Lambda(G4,G4;1,1)", l11.re());
        b.push("z3^2/pi^6", z3 * z3 / pow_si(BigFloat::pi(ctx.bits()), 6));
        return find_relation(b, BigInt(1000), ctx);
    };
    auto r1 = one_run(60);
    auto r2 = one_run(120);
    bool found = r1.has_value() && r2.has_value();
    bool coeffs_ok = false;
    if (found) {
        const auto& c = r1->coefficients;
        coeffs_ok = (c[0].abs() == BigInt(128) && c[1].abs() == BigInt(1) &&
                     c[0].sign() != c[1].sign());
    }
    double shrink = found ? (r1->residual.log10_abs() - r2->residual.log10_abs()) : 0;
    std::ostringstream det;
    if (found)
        det << "coefficients (" << r1->coefficients[0] << ", " << r1->coefficients[1]
            << "), residual shrink 1e" << static_cast<int>(shrink)
            << " under precision doubling, margin 1e"
            << static_cast<int>(std::log10(r1->confidence_margin));
    s.report(13, "relation re-discovery: Lambda(G4,G4;1,1) = zeta(3)^2/(2^7 pi^6)",
             found && coeffs_ok && shrink >= 40, det.str());
}

void criterion14(Suite& s) {
    auto t0 = std::chrono::steady_clock::now();
    std::ostringstream det;
    bool ok = true;

    // Delta Hecke multiplicativity, mn <= 200, exact.
    {
        QExpansion d = delta(200);
        bool hecke = true;
        for (long m = 2; m * m <= 200; ++m)
            for (long n = m + 1; m * n <= 200; ++n) {
                if (std::gcd(m, n) != 1) continue;
                if (!(d.coeff(m) * d.coeff(n) == d.coeff(m * n))) hecke = false;
            }
        ok = ok && hecke;
        det << "hecke(mn<=200) " << (hecke ? "exact" : "FAILED") << "; ";
    }
    // Delta' coefficients, exact.
    {
        QExpansion dp = delta_prime(3);
        bool dpok = dp.coeff(2) == Rational(47709536) &&
                    dp.coeff(3) == Rational(BigInt("39862705122"));
        ok = ok && dpok;
        det << "Delta' a2, a3 " << (dpok ? "exact" : "FAILED") << "; ";
    }
    // Holder vs direct-sum oracle to 12 digits on every index in the
    // weight-12 representative formula.
    {
        PrecisionContext ctx(40);
        double worst = -1e18;
        for (auto idx : std::vector<std::vector<long>>{{5, 3, 2, 2}, {5, 7}, {7, 5}, {3, 9},
                                                       {3, 7}, {7, 3}, {3, 5}, {5, 3}, {2}, {3},
                                                       {4}, {5}, {6}, {7}, {9}, {12}}) {
            MZVIndex mi{idx};
            DirectSumResult o = mzv_direct_sum(mi);
            BigFloat h = multiple_zeta(mi, ctx);
            double dev = (abs(o.value - h)).log10_abs() - std::max(0.0, h.log10_abs());
            worst = std::max(worst, dev);
        }
        ok = ok && worst <= -12;
        det << "holder-vs-oracle worst 1e" << static_cast<int>(worst) << "; ";
    }
    // Dimension recursion up to weight 30 plus the printed initial segment.
    {
        auto d = coradical_dimensions(30);
        bool dims = d[0] == 1 && d[1] == 0 && d[2] == 1 && d[3] == 1 && d[4] == 1 && d[5] == 2 &&
                    d[6] == 2 && d[7] == 3 && d[8] == 4 && d[12] == 12;
        for (size_t n = 3; n < d.size(); ++n)
            if (d[n] != d[n - 2] + d[n - 3]) dims = false;
        ok = ok && dims;
        det << "dimensions " << (dims ? "ok" : "FAILED") << "; ";
    }
    // delta_stack / solve_from_stack round trip, exact on random rationals.
    {
        unsigned long long seed = 0x2545F4914F6CDD1DULL;
        auto rnd = [&seed]() {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            return seed;
        };
        const std::vector<std::pair<long, long>> shapes = {{2, 8}, {4, 6}, {3, 5}, {5, 5}};
        bool rt = true;
        for (int trial = 0; trial < 100; ++trial) {
            auto [d1, d2] = shapes[static_cast<size_t>(trial % shapes.size())];
            BiPoly<Rational> P(d1, d2, Rational(0));
            for (auto& c : P.c)
                c = Rational(static_cast<long>(rnd() % 41) - 20, static_cast<long>(rnd() % 7) + 1);
            BiPoly<Rational> back = solve_from_stack(delta_stack(P), d1, d2);
            for (size_t i = 0; i < P.c.size(); ++i)
                if (!(P.c[i] == back.c[i])) rt = false;
        }
        ok = ok && rt;
        det << "stack round trip " << (rt ? "exact x100" : "FAILED") << "; ";
    }
    // Stack finiteness: delta^k = 0 for k > min(d1,d2), checked nonvacuously
    // through the exact-level count and the numeric solve/stack round trip on
    // the actual generating functions. The top level delta^min does NOT
    // vanish (it carries the zeta_{3,7}-type coefficient of B^(min)); its
    // nonzero magnitude is reported, not asserted away.
    {
        Check rt;
        double top_g44 = 0, top_g410 = 0;
        for (auto pr : std::vector<std::pair<FormId, FormId>>{
                 {FormId::eisenstein(4), FormId::eisenstein(4)},
                 {FormId::eisenstein(4), FormId::eisenstein(10)}}) {
            BiPoly<BigComplex> P = generating_function(s.table(pr.first, pr.second), pr.first,
                                                       pr.second);
            DeltaStack<BigComplex> st = delta_stack(P);
            long kmin = std::min(P.d1, P.d2);
            if (static_cast<long>(st.entries.size()) != kmin + 1) ok = false;
            BiPoly<BigComplex> back = solve_from_stack(st, P.d1, P.d2);
            for (size_t i = 0; i < P.c.size(); ++i) rt.add(back.c[i], P.c[i]);
            double top = -1e18;
            for (const auto& c : st.entries.back().c) top = std::max(top, c.abs().log10_abs());
            (pr.second.weight == 4 ? top_g44 : top_g410) = top;
        }
        bool top_nonzero = top_g44 > -30 && top_g410 > -30;
        ok = ok && rt.within(40) && top_nonzero;
        det << "stack levels/round trip on P_{f,g} " << rt.str() << "; top-level delta^min is "
            << "genuinely nonzero (1e" << static_cast<int>(top_g44) << ", 1e"
            << static_cast<int>(top_g410) << "; the vanishing threshold is min+1, not min)";
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    det << ", " << std::to_string(dt).substr(0, 5) << "s";
    s.report(14, "property suite (Hecke, Delta', MZV oracle, dimensions, stack bijection)", ok,
             det.str());
}

} // namespace

std::vector<CriterionResult> run_acceptance(std::ostream& out, int base_digits) {
    Suite s(std::max(50, base_digits), out);
    criterion1(s);
    criterion2(s);
    criterion3(s);
    criterion4(s);
    criterion5(s);
    criterion6(s);
    criterion7(s);
    criterion8(s);
    criterion9(s);
    criterion10(s);
    criterion11(s);
    criterion12(s);
    criterion13(s);
    criterion14(s);
    int passed = 0;
    for (const auto& r : s.results) passed += r.pass ? 1 : 0;
    out << (passed == 14 ? "ALL 14 CRITERIA PASSED" : "FAILURES PRESENT") << " (" << passed
        << "/14)\n";
    return s.results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return !results.empty();
}

} // namespace mmv
