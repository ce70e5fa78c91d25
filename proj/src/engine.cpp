#include "mmv/engine.hpp"

#include "mmv/errors.hpp"

namespace mmv {

long IterandWord::index_sum() const {
    long s = 0;
    for (const auto& l : letters) s += l.n;
    return s;
}

void IterandWord::validate() const {
    if (length() > 3) throw domain_error("IterandWord: length > 3 unsupported");
    for (const auto& l : letters) {
        if (l.form.kind == FormKind::DeltaPrime)
            throw domain_error("IterandWord: non-totally-holomorphic letters out of scope");
        if (!(0 < l.n && l.n < l.form.weight))
            throw domain_error("IterandWord: index must satisfy 0 < n < w");
    }
}

PulledLetter s_pullback(const Letter& l) {
    int sign = (l.n - 1) % 2 == 0 ? 1 : -1;
    return {sign, Letter{l.form, l.form.weight - l.n}};
}

EngineContext::EngineContext(const PrecisionContext& ctx, long qterms_override)
    : ctx_(ctx),
      qterms_(qterms_override > 0 ? qterms_override
                                  : truncation_for_digits(ctx.working_digits(), 35)) {}

namespace {

std::pair<int, int> form_key(const FormId& f) {
    return {static_cast<int>(f.kind), f.weight};
}

} // namespace

const std::vector<BigComplex>& EngineContext::coefficients(const FormId& f) {
    auto it = cache_.find(form_key(f));
    if (it != cache_.end()) return it->second.second;
    QExpansion qe = form_expansion(f, qterms_);
    std::vector<BigComplex> c;
    c.reserve(static_cast<size_t>(qterms_ - qe.leading_order() + 1));
    for (long n = qe.leading_order(); n <= qterms_; ++n)
        c.emplace_back(BigFloat(qe.coeff(n), ctx_.bits()));
    return cache_.emplace(form_key(f), std::make_pair(qe.leading_order(), std::move(c)))
        .first->second.second;
}

long EngineContext::leading_order(const FormId& f) {
    coefficients(f);
    return cache_.find(form_key(f))->second.first;
}

namespace {

// g_{r+1} = 1, g_j = reg_primitive(omega_j g_{j+1}); result is g_1.
QTauElement iterated_primitive(const IterandWord& word, EngineContext& ec) {
    QTauElement g = QTauElement::one(ec.qterms(), ec.bits());
    for (long j = word.length() - 1; j >= 0; --j) {
        const Letter& l = word.letters[static_cast<size_t>(j)];
        g = g.mul_form(ec.coefficients(l.form), ec.leading_order(l.form), l.n - 1).reg_primitive();
    }
    return g;
}

// Left piece of the Chen split: the regularized integral over (0, i] of
// omega_1...omega_k equals (-1)^{n_1+...+n_k} times the tail integral of the
// reversed S-pullbacks (path reversal composed with tau -> -1/tau).
BigComplex left_integral(const IterandWord& word, long k, EngineContext& ec) {
    if (k == 0) return BigComplex(1, ec.bits());
    IterandWord rev;
    int sign = 1;
    long nsum = 0;
    for (long j = k - 1; j >= 0; --j) {
        PulledLetter pl = s_pullback(word.letters[static_cast<size_t>(j)]);
        sign *= pl.sign;
        rev.letters.push_back(pl.letter);
        nsum += word.letters[static_cast<size_t>(j)].n;
    }
    (void)nsum; // total sign (-1)^k * prod (-1)^{n_j-1} == (-1)^{sum n_j}
    if (k % 2 == 1) sign = -sign;
    BigComplex v = iterated_primitive(rev, ec).evaluate_at_iy(BigFloat(1, ec.bits()));
    return sign < 0 ? -v : v;
}

} // namespace

BigComplex tail_integral(const IterandWord& word, EngineContext& ec) {
    if (word.length() == 0) return BigComplex(1, ec.bits());
    return iterated_primitive(word, ec).evaluate_at_iy(BigFloat(1, ec.bits()));
}

BigComplex tail_integral_from(const IterandWord& word, const BigFloat& y, EngineContext& ec) {
    if (word.length() == 0) return BigComplex(1, ec.bits());
    return iterated_primitive(word, ec).evaluate_at_iy(y);
}

BigComplex segment_integral(const IterandWord& word, const BigFloat& y1, EngineContext& ec) {
    // A_0 = 1; A_j(tau) = int_i^tau omega_j A_{j-1} = P_j(i) - P_j(tau) with
    // P_j = reg_primitive(omega_j A_{j-1}); returns A_r(i y1).
    QTauElement a = QTauElement::one(ec.qterms(), ec.bits());
    BigComplex a_at_y1(1, ec.bits());
    const BigFloat one(1, ec.bits());
    for (long j = 0; j < word.length(); ++j) {
        const Letter& l = word.letters[static_cast<size_t>(j)];
        QTauElement p =
            a.mul_form(ec.coefficients(l.form), ec.leading_order(l.form), l.n - 1).reg_primitive();
        BigComplex p_at_i = p.evaluate_at_iy(one);
        // A_j = p(i) - p(tau) as a ring element
        QTauElement next(ec.qterms(), ec.bits());
        next.add(0, 0, p_at_i);
        for (long m = 0; m <= ec.qterms(); ++m)
            for (long pp = 0; pp <= p.tau_degree(m); ++pp)
                if (!p.coeff(m, pp).is_zero()) next.add(m, pp, -p.coeff(m, pp));
        a_at_y1 = next.evaluate_at_iy(y1);
        a = std::move(next);
    }
    return a_at_y1;
}

MMValue lambda_mmv(const IterandWord& word, EngineContext& ec) {
    word.validate();
    const long r = word.length();
    BigComplex raw(ec.bits());
    for (long k = 0; k <= r; ++k) {
        IterandWord right;
        right.letters.assign(word.letters.begin() + k, word.letters.end());
        raw += left_integral(word, k, ec) * tail_integral(right, ec);
    }
    BigComplex unit = BigComplex::i_power(-word.index_sum(), ec.bits());
    return {word, raw, unit * raw, unit};
}

MMValue lambda_mmv(const IterandWord& word, const PrecisionContext& ctx) {
    EngineContext ec(ctx);
    return lambda_mmv(word, ec);
}

std::vector<std::vector<MMValue>> mmv_table(const FormId& f, const FormId& g, EngineContext& ec) {
    std::vector<std::vector<MMValue>> table;
    for (long n1 = 1; n1 < f.weight; ++n1) {
        std::vector<MMValue> row;
        for (long n2 = 1; n2 < g.weight; ++n2)
            row.push_back(lambda_mmv(IterandWord{{Letter{f, n1}, Letter{g, n2}}}, ec));
        table.push_back(std::move(row));
    }
    return table;
}

std::vector<std::vector<MMValue>> mmv_table(const FormId& f, const FormId& g,
                                            const PrecisionContext& ctx) {
    EngineContext ec(ctx);
    return mmv_table(f, g, ec);
}

IterandWord make_word(std::initializer_list<std::pair<FormId, long>> ls) {
    IterandWord w;
    for (const auto& [f, n] : ls) w.letters.push_back(Letter{f, n});
    return w;
}

} // namespace mmv
