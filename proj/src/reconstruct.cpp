// Copyright 2026 The Malmsten Toolkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "malmsten/reconstruct.hpp"

#include <algorithm>
#include <cmath>

#include "malmsten/constants.hpp"
#include "malmsten/matrix.hpp"
#include "malmsten/quadrature.hpp"

namespace malmsten {

std::optional<BigRational> rational_reconstruct(const Real& x, const BigInt& max_denominator) {
    if (max_denominator < 1)
        throw std::invalid_argument("rational_reconstruct: max_denominator >= 1 required");
    // uniqueness window: error < 1/(2 D^2)
    Real window(Real::kErrPrec);
    BigRational w = make_rational(BigInt(1), BigInt(2) * max_denominator * max_denominator);
    window = Real::from_rational(w, 64);
    if (mpfr_cmp(x.error(), window.value()) >= 0)
        throw InsufficientPrecision(
            "rational_reconstruct: error bound too large for the requested denominator bound");

    // exact rational midpoint, then walk its continued-fraction convergents
    BigRational mid;
    mpfr_get_q(mid.get_mpq_t(), x.value());
    Real err_q(Real::kErrPrec);
    BigRational errq;
    mpfr_get_q(errq.get_mpq_t(), x.error());

    BigInt p_prev(0), q_prev(1), p_cur(1), q_cur(0);  // convergent recurrence seeds
    BigRational rem = mid;
    for (int step = 0; step < 20000; ++step) {
        BigInt a;
        mpz_fdiv_q(a.get_mpz_t(), rem.get_num().get_mpz_t(), rem.get_den().get_mpz_t());
        BigInt p_new = a * p_cur + p_prev;
        BigInt q_new = a * q_cur + q_prev;
        if (q_new > max_denominator) return std::nullopt;
        BigRational cand = make_rational(p_new, q_new);
        if (abs(cand - mid) <= errq) return cand;
        BigRational frac = rem - BigRational(a);
        if (frac == 0) return std::nullopt;  // exact expansion ended beyond the window
        rem = BigRational(1) / frac;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_new;
        q_cur = q_new;
    }
    return std::nullopt;
}

namespace {

struct Mpf {
    mpfr_t v;
    explicit Mpf(mpfr_prec_t prec) { mpfr_init2(v, prec); mpfr_set_zero(v, 1); }
    Mpf(const Mpf&) = delete;
    ~Mpf() { mpfr_clear(v); }
};

// Plain-midpoint matrix/vector helpers for the PSLQ core; certification of
// any candidate happens afterwards in ball arithmetic.
class PslqCore {
public:
    PslqCore(const std::vector<Real>& values, mpfr_prec_t prec)
        : n_(values.size()), prec_(prec), y_(n_), h_(n_ * (n_ - 1)), x_(n_) {
        for (auto& m : y_) mpfr_init2(&m, prec_);
        for (auto& m : h_) mpfr_init2(&m, prec_);
        for (auto& m : x_) mpfr_init2(&m, prec_);
        for (auto& m : y_) mpfr_set_zero(&m, 1);
        for (auto& m : h_) mpfr_set_zero(&m, 1);
        mpfr_init2(s0_, prec_);
        a_.assign(n_ * n_, BigInt(0));
        b_.assign(n_ * n_, BigInt(0));
        for (size_t i = 0; i < n_; ++i) a_[i * n_ + i] = b_[i * n_ + i] = 1;

        std::vector<__mpfr_struct> s(n_);
        for (auto& m : s) mpfr_init2(&m, prec_);
        mpfr_t t, u;
        mpfr_init2(t, prec_);
        mpfr_init2(u, prec_);
        for (size_t k = n_; k-- > 0;) {
            mpfr_set(&x_[k], values[k].value(), MPFR_RNDN);
            mpfr_sqr(t, values[k].value(), MPFR_RNDN);
            if (k + 1 < n_) mpfr_add(t, t, u, MPFR_RNDN);
            mpfr_set(u, t, MPFR_RNDN);  // running sum of squares
            mpfr_sqrt(&s[k], t, MPFR_RNDN);
        }
        mpfr_set(s0_, &s[0], MPFR_RNDN);
        for (size_t i = 0; i < n_; ++i)
            mpfr_div(Y(i), values[i].value(), &s[0], MPFR_RNDN);
        for (size_t k = n_; k-- > 0;) mpfr_div(&s[k], &s[k], &s[0], MPFR_RNDN);
        for (size_t j = 0; j + 1 < n_; ++j) {
            mpfr_div(H(j, j), &s[j + 1], &s[j], MPFR_RNDN);
            for (size_t i = j + 1; i < n_; ++i) {
                mpfr_mul(t, Y(i), Y(j), MPFR_RNDN);
                mpfr_mul(u, &s[j], &s[j + 1], MPFR_RNDN);
                mpfr_div(t, t, u, MPFR_RNDN);
                mpfr_neg(H(i, j), t, MPFR_RNDN);
            }
        }
        mpfr_clear(t);
        mpfr_clear(u);
        for (auto& m : s) mpfr_clear(&m);
        reduce_from(1);
    }

    PslqCore(const PslqCore&) = delete;
    PslqCore& operator=(const PslqCore&) = delete;

    ~PslqCore() {
        for (auto& m : y_) mpfr_clear(&m);
        for (auto& m : h_) mpfr_clear(&m);
        for (auto& m : x_) mpfr_clear(&m);
        mpfr_clear(s0_);
    }

    // The incremental y drifts once reduction quotients stop fitting the
    // mantissa; rebuilding y = x B / s0 from the exact integer matrix
    // restores integrity. Returns the index of the smallest rebuilt |y|.
    size_t refresh_y() {
        overflow_ = false;
        mpfr_t acc, t;
        mpfr_init2(acc, prec_);
        mpfr_init2(t, prec_);
        size_t idx = 0;
        mpfr_t best;
        mpfr_init2(best, prec_);
        for (size_t i = 0; i < n_; ++i) {
            mpfr_set_zero(acc, 1);
            for (size_t j = 0; j < n_; ++j) {
                if (b_[j * n_ + i] == 0) continue;
                mpfr_mul_z(t, &x_[j], b_[j * n_ + i].get_mpz_t(), MPFR_RNDN);
                mpfr_add(acc, acc, t, MPFR_RNDN);
            }
            mpfr_div(Y(i), acc, s0_, MPFR_RNDN);
            mpfr_abs(t, Y(i), MPFR_RNDN);
            if (i == 0 || mpfr_cmp(t, best) < 0) {
                mpfr_set(best, t, MPFR_RNDN);
                idx = i;
            }
        }
        mpfr_clear(acc);
        mpfr_clear(t);
        mpfr_clear(best);
        return idx;
    }

    bool quotient_overflowed() const { return overflow_; }

    size_t n() const { return n_; }

    // one PSLQ exchange step; returns false when no pivot is available
    void step(double gamma) {
        size_t m = 0;
        Mpf bestv(prec_), tv(prec_);
        mpfr_set_si(bestv.v, -1, MPFR_RNDN);
        double g = gamma;
        for (size_t j = 0; j + 1 < n_; ++j, g *= gamma) {
            mpfr_abs(tv.v, H(j, j), MPFR_RNDN);
            mpfr_mul_d(tv.v, tv.v, g, MPFR_RNDN);
            if (mpfr_cmp(tv.v, bestv.v) > 0) {
                mpfr_set(bestv.v, tv.v, MPFR_RNDN);
                m = j;
            }
        }
        mpfr_swap(Y(m), Y(m + 1));
        for (size_t k = 0; k + 1 < n_; ++k) mpfr_swap(H(m, k), H(m + 1, k));
        for (size_t k = 0; k < n_; ++k) {
            std::swap(a_[m * n_ + k], a_[(m + 1) * n_ + k]);
            std::swap(b_[k * n_ + m], b_[k * n_ + m + 1]);
        }
        if (m + 2 < n_) {
            Mpf t0(prec_), t1(prec_), t2(prec_), t3(prec_), t4(prec_);
            mpfr_hypot(t0.v, H(m, m), H(m, m + 1), MPFR_RNDN);
            mpfr_div(t1.v, H(m, m), t0.v, MPFR_RNDN);
            mpfr_div(t2.v, H(m, m + 1), t0.v, MPFR_RNDN);
            for (size_t i = m; i < n_; ++i) {
                mpfr_set(t3.v, H(i, m), MPFR_RNDN);
                mpfr_set(t4.v, H(i, m + 1), MPFR_RNDN);
                mpfr_mul(H(i, m), t1.v, t3.v, MPFR_RNDN);
                mpfr_fma(H(i, m), t2.v, t4.v, H(i, m), MPFR_RNDN);
                mpfr_mul(H(i, m + 1), t1.v, t4.v, MPFR_RNDN);
                mpfr_neg(t3.v, t3.v, MPFR_RNDN);
                mpfr_fma(H(i, m + 1), t2.v, t3.v, H(i, m + 1), MPFR_RNDN);
            }
        }
        reduce_from(m == 0 ? 1 : m);
    }

    // smallest |y_i| and its index
    size_t min_y(mpfr_ptr out) const {
        size_t idx = 0;
        mpfr_abs(out, Y(0), MPFR_RNDN);
        Mpf t(prec_);
        for (size_t i = 1; i < n_; ++i) {
            mpfr_abs(t.v, Y(i), MPFR_RNDN);
            if (mpfr_cmp(t.v, out) < 0) {
                mpfr_set(out, t.v, MPFR_RNDN);
                idx = i;
            }
        }
        return idx;
    }

    // 1 / max_j |H_jj|: a lower bound on the norm of any integer relation
    double norm_floor() const {
        Mpf mx(prec_), t(prec_);
        for (size_t j = 0; j + 1 < n_; ++j) {
            mpfr_abs(t.v, H(j, j), MPFR_RNDN);
            if (mpfr_cmp(t.v, mx.v) > 0) mpfr_set(mx.v, t.v, MPFR_RNDN);
        }
        if (mpfr_zero_p(mx.v)) return 0.0;
        mpfr_ui_div(t.v, 1, mx.v, MPFR_RNDD);
        return mpfr_get_d(t.v, MPFR_RNDD);
    }

    std::vector<BigInt> relation_candidate(size_t idx) const {
        std::vector<BigInt> c(n_);
        for (size_t i = 0; i < n_; ++i) c[i] = b_[i * n_ + idx];
        return c;
    }

private:
    mpfr_ptr Y(size_t i) { return &y_[i]; }
    mpfr_srcptr Y(size_t i) const { return &y_[i]; }
    mpfr_ptr H(size_t i, size_t j) { return &h_[i * (n_ - 1) + j]; }
    mpfr_srcptr H(size_t i, size_t j) const { return &h_[i * (n_ - 1) + j]; }

    void reduce_from(size_t row) {
        Mpf q(prec_);
        BigInt t;
        for (size_t i = std::max<size_t>(row, 1); i < n_; ++i) {
            for (size_t j = i; j-- > 0;) {
                if (mpfr_zero_p(H(j, j))) continue;
                mpfr_div(q.v, H(i, j), H(j, j), MPFR_RNDN);
                mpfr_round(q.v, q.v);
                if (mpfr_zero_p(q.v)) continue;
                if (mpfr_get_exp(q.v) > prec_ - 16) {
                    // quotient no longer fits the mantissa: applying it would
                    // desynchronize y/H from the exact A/B
                    overflow_ = true;
                    continue;
                }
                mpfr_get_z(t.get_mpz_t(), q.v, MPFR_RNDN);
                // y_j += t y_i ; row_i(H/A) -= t row_j ; col_j(B) += t col_i
                mpfr_fma(Y(j), q.v, Y(i), Y(j), MPFR_RNDN);
                for (size_t k = 0; k <= j; ++k) {
                    mpfr_fms(H(i, k), q.v, H(j, k), H(i, k), MPFR_RNDN);
                    mpfr_neg(H(i, k), H(i, k), MPFR_RNDN);
                }
                for (size_t k = 0; k < n_; ++k) {
                    a_[i * n_ + k] -= t * a_[j * n_ + k];
                    b_[k * n_ + j] += t * b_[k * n_ + i];
                }
            }
        }
    }

    size_t n_;
    mpfr_prec_t prec_;
    std::vector<__mpfr_struct> y_;
    std::vector<__mpfr_struct> h_;
    std::vector<__mpfr_struct> x_;
    mpfr_t s0_;
    std::vector<BigInt> a_;
    std::vector<BigInt> b_;
    bool overflow_ = false;
};

Real combination_value(const std::vector<Real>& values, const std::vector<BigInt>& c,
                       mpfr_prec_t prec) {
    Real acc(prec);
    for (size_t i = 0; i < values.size(); ++i)
        acc = add(acc, mul_rational(values[i], BigRational(c[i])));
    return acc;
}

}  // namespace

RelationResult pslq(const std::vector<Real>& values, long digits, long max_height) {
    if (values.size() < 2) throw std::invalid_argument("pslq: at least two values required");
    if (max_height < 1) throw std::invalid_argument("pslq: max_height >= 1 required");
    for (const auto& v : values)
        if (!v.error_below_pow10(digits))
            throw std::invalid_argument("pslq: inputs must be certified to the requested digits");

    RelationResult out;
    out.height_bound = max_height;
    out.digits_used = digits;

    // an exactly-zero input is already a relation
    for (size_t i = 0; i < values.size(); ++i) {
        if (values[i].possibly_zero()) {
            out.status = RelationResult::Status::found;
            out.coefficients.assign(values.size(), BigInt(0));
            out.coefficients[i] = 1;
            out.residual = abs(values[i]);
            return out;
        }
    }

    mpfr_prec_t prec = prec_for_digits(digits);
    PslqCore core(values, prec);

    Mpf ymin(prec);
    Mpf detect(prec);
    long detect_exp = std::max(digits - 10, digits / 2 + 2);
    mpfr_set_ui(detect.v, 10, MPFR_RNDN);
    mpfr_pow_si(detect.v, detect.v, -detect_exp, MPFR_RNDN);

    // A lattice near-miss can dip below the detection threshold without being
    // a relation; such candidates are rejected by the ball certification and
    // iteration continues. Re-certify only on a much deeper dip.
    Mpf rejected_at(prec);
    mpfr_set_inf(rejected_at.v, 1);

    auto certify = [&](std::vector<BigInt> c) -> bool {
        Real resid = combination_value(values, c, prec);
        Mpf mid(64), upper(64), zero_tol(64), limit(64);
        mpfr_abs(mid.v, resid.value(), MPFR_RNDU);
        mpfr_add(upper.v, mid.v, resid.error(), MPFR_RNDU);
        // consistent with zero: |mid| <= 4 (err + 10^{-digits})
        mpfr_set_ui(zero_tol.v, 10, MPFR_RNDN);
        mpfr_pow_si(zero_tol.v, zero_tol.v, -digits, MPFR_RNDU);
        mpfr_add(zero_tol.v, zero_tol.v, resid.error(), MPFR_RNDU);
        mpfr_mul_2si(zero_tol.v, zero_tol.v, 2, MPFR_RNDU);
        mpfr_set_ui(limit.v, 10, MPFR_RNDN);
        mpfr_pow_si(limit.v, limit.v, -(digits / 2), MPFR_RNDD);
        if (mpfr_cmp(mid.v, zero_tol.v) <= 0 && mpfr_cmp(upper.v, limit.v) <= 0) {
            out.status = RelationResult::Status::found;
            out.coefficients = std::move(c);
            out.residual = resid;
            return true;
        }
        return false;
    };

    const long max_iter = 60000;
    for (long iter = 1; iter <= max_iter; ++iter) {
        core.step(1.1547005383792515);  // sqrt(4/3)
        out.iterations = iter;

        size_t idx = core.min_y(ymin.v);
        bool dipped = mpfr_cmp(ymin.v, detect.v) < 0;
        if (dipped || core.quotient_overflowed()) {
            bool overflowed = core.quotient_overflowed();
            // rebuild y from the exact integer matrix before trusting a dip
            idx = core.refresh_y();
            core.min_y(ymin.v);
            Mpf recheck(prec);
            mpfr_div_ui(recheck.v, rejected_at.v, 1000000, MPFR_RNDN);
            bool confirmed = mpfr_cmp(ymin.v, detect.v) < 0;
            if (confirmed && mpfr_cmp(ymin.v, recheck.v) < 0) {
                if (certify(core.relation_candidate(idx))) return out;
                mpfr_set(rejected_at.v, ymin.v, MPFR_RNDN);
            }
            if (overflowed)
                throw InsufficientPrecision(
                    "pslq: working precision exhausted before certification; increase digits");
            continue;
        }

        // Exhaustion certificate: 1/max|H_jj| lower-bounds every relation's
        // norm while no dip is in play (a dip collapses the diagonal).
        double floor_norm = core.norm_floor();
        if (floor_norm > static_cast<double>(max_height)) {
            out.status = RelationResult::Status::none_up_to_bound;
            BigRational nb;
            mpq_set_d(nb.get_mpq_t(), std::nextafter(floor_norm, 0.0));
            out.norm_bound = nb;
            return out;
        }
    }
    throw InsufficientPrecision("pslq: iteration budget exhausted; increase digits");
}

CoeffFamily parse_coeff_family(const std::string& name) {
    if (name == "sin4nx") return CoeffFamily::sin4nx;
    if (name == "cos4n2x") return CoeffFamily::cos4n2x;
    if (name == "arctanh") return CoeffFamily::arctanh;
    if (name == "arctanh-sqrt") return CoeffFamily::arctanh_sqrt;
    throw std::invalid_argument("unknown coefficient family '" + name + "'");
}

std::string coeff_family_name(CoeffFamily f) {
    switch (f) {
        case CoeffFamily::sin4nx: return "sin4nx";
        case CoeffFamily::cos4n2x: return "cos4n2x";
        case CoeffFamily::arctanh: return "arctanh";
        case CoeffFamily::arctanh_sqrt: return "arctanh-sqrt";
    }
    return "?";
}

namespace {

KernelSpec family_kernel(CoeffFamily f, long n) {
    switch (f) {
        case CoeffFamily::sin4nx: return KernelSpec::make(KernelFamily::F3, {n});
        case CoeffFamily::cos4n2x: return KernelSpec::make(KernelFamily::F4, {n});
        case CoeffFamily::arctanh: return KernelSpec::make(KernelFamily::F9, {n});
        case CoeffFamily::arctanh_sqrt: return KernelSpec::make(KernelFamily::F10, {n});
    }
    throw std::logic_error("family_kernel: unhandled family");
}

bool family_zeta_basis(CoeffFamily f) {
    return f == CoeffFamily::sin4nx || f == CoeffFamily::arctanh;
}

Real family_basis(CoeffFamily f, unsigned p, long digits) {
    return family_zeta_basis(f) ? zeta_ratio(p, digits) : beta_ratio(p, digits);
}

}  // namespace

CoeffRow solve_coeffs(CoeffFamily family, long n, long digits) {
    if (n < 1) throw std::invalid_argument("solve_coeffs: n >= 1 required");
    // the lattice stage needs roughly (n+1) * log10(coefficient height)
    // digits; heights grow fast with the row index
    long work = std::max(digits, 30L) + 15 + 10 * (n - 1);
    CoeffRow row;
    row.n = n;
    row.digits_used = digits;

    std::vector<Real> vals;
    vals.push_back(integrate(family_kernel(family, n), work).value);
    for (long p = 1; p <= n; ++p)
        vals.push_back(family_basis(family, static_cast<unsigned>(p), work));

    RelationResult rel = pslq(vals, work - 5, 1000000000000L);
    if (rel.status != RelationResult::Status::found || rel.coefficients[0] == 0) {
        row.certified = false;
        row.residual = Real(prec_for_digits(digits));
        return row;
    }
    BigRational denom(rel.coefficients[0]);
    row.coeffs.reserve(static_cast<size_t>(n));
    for (long p = 1; p <= n; ++p)
        row.coeffs.push_back(BigRational(-rel.coefficients[static_cast<size_t>(p)]) / denom);

    // certify at doubled precision
    long certify = 2 * std::max(digits, 30L);
    Real lhs = integrate(family_kernel(family, n), certify).value;
    Real rhs(prec_for_digits(certify));
    for (long p = 1; p <= n; ++p)
        rhs = add(rhs, mul_rational(family_basis(family, static_cast<unsigned>(p), certify),
                                    row.coeffs[static_cast<size_t>(p - 1)]));
    row.residual = abs(sub(lhs, rhs));
    Real cert(Real::kErrPrec);
    mpfr_abs(cert.raw_value(), row.residual.value(), MPFR_RNDU);
    mpfr_add(cert.raw_value(), cert.value(), row.residual.error(), MPFR_RNDU);
    Real limit(Real::kErrPrec);
    mpfr_set_ui(limit.raw_value(), 10, MPFR_RNDN);
    mpfr_pow_si(limit.raw_value(), limit.value(), -(2 * std::max(digits, 30L) - 10), MPFR_RNDD);
    row.certified = mpfr_cmp(cert.value(), limit.value()) <= 0;
    return row;
}

CoeffTable solve_coeff_table(CoeffFamily family, long n_max, long digits) {
    CoeffTable t;
    t.family = family;
    t.zeta_basis = family_zeta_basis(family);
    for (long n = 1; n <= n_max; ++n) t.rows.push_back(solve_coeffs(family, n, digits));
    return t;
}

RationalPolynomial poly_family(PolyFamily family, long n, long digits) {
    if (n < 1) throw std::invalid_argument("poly_family: n >= 1 required");
    CoeffFamily base =
        family == PolyFamily::xi ? CoeffFamily::arctanh_sqrt : CoeffFamily::arctanh;
    RationalMatrix C(static_cast<size_t>(n), static_cast<size_t>(n));
    for (long p = 1; p <= n; ++p) {
        CoeffRow row = solve_coeffs(base, p, digits);
        if (!row.certified)
            throw InsufficientPrecision("poly_family: uncertified coefficient row " +
                                        std::to_string(p));
        for (long q = 1; q <= p; ++q)
            C.at(static_cast<size_t>(p - 1), static_cast<size_t>(q - 1)) =
                row.coeffs[static_cast<size_t>(q - 1)];
    }
    std::vector<BigRational> inv_row = triangular_invert(C, static_cast<size_t>(n));
    std::vector<BigRational> poly(static_cast<size_t>(2 * n - 1), BigRational(0));
    for (long p = 1; p <= n; ++p) poly[static_cast<size_t>(2 * p - 2)] = inv_row[static_cast<size_t>(p - 1)];
    return RationalPolynomial(std::move(poly));
}

Real fourier_partial_sum(long K, long digits) {
    if (K < 0) throw std::invalid_argument("fourier_partial_sum: K >= 0 required");
    std::vector<std::pair<BigRational, KernelSpec>> combo;
    for (long k = 0; k < K; ++k)
        combo.emplace_back(make_rational(-2, 2 * k + 1), KernelSpec::make(KernelFamily::F4, {k + 1}));
    return integrate_combination(combo, digits);
}

Real verify_kyrion(bool zeta_target, long N, long digits) {
    if (N < 1 || N > 3) throw std::invalid_argument("verify_kyrion: N in 1..3");
    KernelSpec spec = KernelSpec::make(KernelFamily::F13, {zeta_target ? 1L : 0L, N});
    Real integral = integrate(spec, digits + 2).value;
    unsigned un = static_cast<unsigned>(N);
    Real expected(prec_for_digits(digits + 2));
    if (zeta_target) {
        BigRational c = (BigRational(int_pow(BigInt(2), 2 * un + 1)) - 1) *
                        BigRational(factorial(2 * un)) / 2;
        if (N % 2 != 0) c = -c;
        expected = mul_rational(zeta_ratio(un, digits + 2), c);
    } else {
        BigRational c = BigRational(int_pow(BigInt(2), 2 * un - 1)) *
                        BigRational(factorial(2 * un - 1));
        if (N % 2 != 0) c = -c;
        expected = mul_rational(beta_ratio(un, digits + 2), c);
    }
    return abs(sub(integral, expected));
}

}  // namespace malmsten
