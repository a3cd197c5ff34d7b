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

#include "malmsten/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "malmsten/identities.hpp"

namespace malmsten {

namespace {

constexpr int kMaxLevels = 12;
constexpr double kTHardCap = 7.0;  // node tables extend this far in t

// Abscissa tables are immutable once built and shared across threads;
// built at 1.5x the working precision.
struct TsNode {
    Real xi;          // tanh((pi/2) sinh t), t > 0
    Real complement;  // 1 - xi, computed without cancellation
    Real weight;      // (pi/2) cosh t / cosh^2((pi/2) sinh t)
};

struct EsNode {
    Real x;       // exp((pi/2) sinh t), either sign of t
    Real weight;  // (pi/2) cosh t * x
};

// Levels: level 0 holds t = 0h, 1h, 2h, ... (h = 1); level L >= 1 holds the
// odd multiples of h = 2^{-L}.
template <typename Node>
class LevelCache {
public:
    using Builder = std::vector<Node> (*)(int level, mpfr_prec_t prec);

    explicit LevelCache(Builder b) : build_(b) {}

    std::shared_ptr<const std::vector<Node>> get(int level, mpfr_prec_t prec) {
        auto key = std::make_pair(static_cast<long>(prec), level);
        {
            std::shared_lock lk(mu_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        auto nodes = std::make_shared<const std::vector<Node>>(build_(level, prec));
        std::unique_lock lk(mu_);
        auto [it, fresh] = map_.emplace(key, nodes);
        return it->second;  // first writer wins
    }

private:
    Builder build_;
    std::shared_mutex mu_;
    std::map<std::pair<long, int>, std::shared_ptr<const std::vector<Node>>> map_;
};

std::vector<double> level_ts(int level) {
    std::vector<double> ts;
    if (level == 0) {
        for (double t = 0.0; t <= kTHardCap; t += 1.0) ts.push_back(t);
    } else {
        double h = std::ldexp(1.0, -level);
        for (long k = 1; k * h <= kTHardCap; k += 2) ts.push_back(k * h);
    }
    return ts;
}

std::vector<TsNode> build_ts_level(int level, mpfr_prec_t prec) {
    std::vector<TsNode> nodes;
    for (double t : level_ts(level)) {
        Real tr(prec);
        mpfr_set_d(tr.raw_value(), t, MPFR_RNDN);  // exact dyadic
        Real w_arg = mul_2si(mul(Real::pi(prec), sinh(tr)), -1);
        Real e2 = exp(mul_2si(neg(w_arg), 1));  // e^{-2 w}
        Real one = Real::from_long(1, prec);
        Real comp = div(mul_2si(e2, 1), add(one, e2));  // 1 - tanh(w)
        Real xi = sub(one, comp);
        Real ch = cosh(w_arg);
        Real weight = div(mul_2si(mul(Real::pi(prec), cosh(tr)), -1), sqr(ch));
        nodes.push_back({std::move(xi), std::move(comp), std::move(weight)});
    }
    return nodes;
}

std::vector<EsNode> build_es_level(int level, mpfr_prec_t prec) {
    std::vector<EsNode> nodes;  // positive t then matching negative t
    for (double t : level_ts(level)) {
        for (int sign = 0; sign < 2; ++sign) {
            if (t == 0.0 && sign == 1) continue;
            Real tr(prec);
            mpfr_set_d(tr.raw_value(), sign == 0 ? t : -t, MPFR_RNDN);
            Real x = exp(mul_2si(mul(Real::pi(prec), sinh(tr)), -1));
            Real weight = mul(mul_2si(mul(Real::pi(prec), cosh(tr)), -1), x);
            nodes.push_back({std::move(x), std::move(weight)});
        }
    }
    return nodes;
}

LevelCache<TsNode>& ts_cache() {
    static LevelCache<TsNode> cache(&build_ts_level);
    return cache;
}

LevelCache<EsNode>& es_cache() {
    static LevelCache<EsNode> cache(&build_es_level);
    return cache;
}

Real round_to(const Real& x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set(r.raw_value(), x.value(), MPFR_RNDN);
    r.add_error(x);
    r.bump_error_ulp();
    return r;
}

struct LevelSum {
    Real sum;        // h-free node sum of this level's lattice additions
    Real wall;       // |contributions| from t in (t_hard - 1, t_hard]
    Real last_mag;   // |contribution| of the outermost node(s) actually summed
    long evaluated = 0;
};

double node_t_of_index(int level, size_t idx) {
    if (level == 0) return static_cast<double>(idx);
    return std::ldexp(1.0, -level) * static_cast<double>(2 * idx + 1);
}

}  // namespace

QuadratureResult integrate_plan(const IntegrandPlan& plan, long digits) {
    long digits_total = digits + 10;
    mpfr_prec_t prec = prec_for_digits(digits);
    mpfr_prec_t node_prec = prec + prec / 2;
    double t_hard = std::min(kTHardCap,
                             std::log((static_cast<double>(digits_total) * 2.302585 + 8.0) * 4.0 /
                                      3.14159265358979) +
                                 1.0);

    const bool finite = plan.transform == Transform::tanh_sinh;
    Real mid(prec), half(prec), one = Real::from_long(1, prec);
    if (finite) {
        mid = mul_2si(add(plan.lower, plan.upper), -1);
        half = mul_2si(sub(plan.upper, plan.lower), -1);
    }

    // cutoff for abandoning a level's tail early
    Real cutoff(Real::kErrPrec);
    mpfr_set_ui(cutoff.raw_value(), 10, MPFR_RNDN);
    mpfr_pow_si(cutoff.raw_value(), cutoff.value(), -(digits_total + 4), MPFR_RNDD);

    auto eval_ts_pair = [&](const TsNode& n, Real& acc, Real& wall_acc, Real& last_mag,
                            double t, bool& tiny) {
        Real xi = round_to(n.xi, prec);
        Real comp = round_to(n.complement, prec);
        Real w = mul(half, round_to(n.weight, prec));  // jacobian of the (a,b) map
        Real near_gap = mul(half, comp);
        Real far_gap = mul(half, add(one, xi));
        Real contrib(prec);
        if (mpfr_zero_p(xi.value())) {
            QuadPoint q{mid, half, half, true};
            contrib = mul(w, plan.eval(q));
        } else {
            // abscissas built from the complement so points hugging an
            // endpoint keep full relative accuracy
            QuadPoint qp{sub(plan.upper, near_gap), far_gap, near_gap, true};
            QuadPoint qm{add(plan.lower, near_gap), near_gap, far_gap, true};
            contrib = mul(w, add(plan.eval(qp), plan.eval(qm)));
        }
        acc = add(acc, contrib);
        if (t > t_hard - 1.0) wall_acc = add(wall_acc, abs(contrib));
        last_mag = abs(contrib);
        tiny = mpfr_cmpabs(contrib.value(), cutoff.value()) < 0;
    };

    auto eval_es_one = [&](const EsNode& n, Real& acc, Real& wall_acc, Real& last_mag,
                           double t, bool& tiny) {
        Real x = round_to(n.x, prec);
        Real w = round_to(n.weight, prec);
        QuadPoint q{x, x, Real(prec), false};
        Real contrib = mul(w, plan.eval(q));
        acc = add(acc, contrib);
        if (t > t_hard - 1.0) wall_acc = add(wall_acc, abs(contrib));
        last_mag = abs(contrib);
        tiny = mpfr_cmpabs(contrib.value(), cutoff.value()) < 0;
    };

    auto run_level = [&](int level) {
        LevelSum out{Real(prec), Real(prec), Real(prec), 0};
        int tiny_streak = 0;
        if (plan.transform == Transform::tanh_sinh) {
            auto nodes = ts_cache().get(level, node_prec);
            for (size_t i = 0; i < nodes->size(); ++i) {
                double t = node_t_of_index(level, i);
                if (t > t_hard) break;
                bool tiny = false;
                eval_ts_pair((*nodes)[i], out.sum, out.wall, out.last_mag, t, tiny);
                ++out.evaluated;
                tiny_streak = tiny ? tiny_streak + 1 : 0;
                if (tiny_streak >= 3 && t > 2.0) break;
            }
        } else {
            auto nodes = es_cache().get(level, node_prec);
            // nodes alternate +t, -t; each side truncates independently
            int streak_pos = 0, streak_neg = 0;
            bool stop_pos = false, stop_neg = false;
            Real last_pos(prec), last_neg(prec);
            for (size_t i = 0; i < nodes->size(); ++i) {
                size_t pair_idx = level == 0 ? (i == 0 ? 0 : (i + 1) / 2) : i / 2;
                double t = node_t_of_index(level, pair_idx);
                if (t > t_hard) break;
                bool negative_side = level == 0 ? (i != 0 && i % 2 == 0) : (i % 2 == 1);
                if ((negative_side && stop_neg) || (!negative_side && stop_pos)) continue;
                bool tiny = false;
                eval_es_one((*nodes)[i], out.sum, out.wall,
                            negative_side ? last_neg : last_pos, t, tiny);
                ++out.evaluated;
                int& streak = negative_side ? streak_neg : streak_pos;
                bool& stop = negative_side ? stop_neg : stop_pos;
                streak = tiny ? streak + 1 : 0;
                if (streak >= 3 && t > 2.0) stop = true;
                if (stop_pos && stop_neg) break;
            }
            out.last_mag = mpfr_cmp(last_pos.value(), last_neg.value()) > 0 ? last_pos : last_neg;
        }
        return out;
    };

    Real scale_one = Real::from_long(1, prec);
    QuadratureResult res;
    res.transform = plan.transform;
    Real s(prec);
    Real prev_delta(prec);
    bool have_prev_delta = false;
    int wall_streak = 0;
    Real best(prec);
    for (int level = 0; level <= kMaxLevels; ++level) {
        LevelSum ls = run_level(level);
        res.nodes_used += ls.evaluated;
        res.levels = level + 1;
        Real h(prec);
        mpfr_set_d(h.raw_value(), std::ldexp(1.0, -level), MPFR_RNDN);
        if (level == 0) {
            s = mul(h, ls.sum);
        } else {
            s = add(mul_2si(s, -1), mul(h, ls.sum));
        }
        Real wall_h = mul(h, ls.wall);

        // Divergence probe: the strip next to the wall must fade with level.
        Real sabs = abs(s);
        Real wall_floor = mul_rational(add(sabs, scale_one), make_rational(1, 1000));
        if (level >= 2 && mpfr_cmp(wall_h.value(), wall_floor.value()) > 0) {
            if (++wall_streak >= 3)
                throw DivergenceError("integrate: wall contribution refuses to decay (divergent integrand)");
        } else if (level >= 2) {
            wall_streak = 0;
        }

        if (level >= 1) {
            Real delta = abs(sub(s, best));
            // Converged when two consecutive levels agree to the request with
            // margin and the omitted tail beyond the wall is similarly small.
            // Node contributions decay double-exponentially there, so the
            // outermost included term bounds the omitted mass up to a small
            // factor.
            Real tail = mul_2si(mul(h, ls.last_mag), 2);
            Real tol = scale_one;
            mpfr_set_ui(tol.raw_value(), 10, MPFR_RNDN);
            mpfr_pow_si(tol.raw_value(), tol.value(), -(digits + 4), MPFR_RNDD);
            Real abs_scale = add(sabs, scale_one);
            Real target = mul(tol, abs_scale);
            bool level_ok = mpfr_cmp(delta.value(), target.value()) < 0;
            bool tail_ok = mpfr_cmp(tail.value(), target.value()) < 0;
            if (level >= 2 && level_ok && tail_ok) {
                Real value = s;
                value.add_error_value(delta);
                value.add_error_value(tail);
                value.add_error_pow10(-(digits_total + 2));  // early-stop allowance
                res.value = value;
                return res;
            }
            have_prev_delta = true;
            prev_delta = delta;
        }
        best = s;
    }
    Real value = s;
    if (have_prev_delta) value.add_error_value(prev_delta);
    throw PrecisionFailure("integrate: level budget exhausted before certification", value);
}

QuadratureResult integrate(const KernelSpec& spec, long digits) {
    IntegrandPlan plan = plan_for(spec, prec_for_digits(digits));
    QuadratureResult res = integrate_plan(plan, digits);
    if (!res.value.error_below_pow10(digits)) {
        // The request is an absolute bound; large-magnitude integrals need
        // the relative engine pushed correspondingly further.
        long magnitude = std::max<long>(0, mpfr_get_exp(res.value.value())) / 3 + 2;
        QuadratureResult retry = integrate_plan(plan, digits + magnitude + 4);
        retry.nodes_used += res.nodes_used;
        if (!retry.value.error_below_pow10(digits))
            throw PrecisionFailure("integrate: certified bound misses the digit request",
                                   retry.value);
        return retry;
    }
    return res;
}

Real integrate_combination(const std::vector<std::pair<BigRational, KernelSpec>>& terms,
                           long digits) {
    mpfr_prec_t prec = prec_for_digits(digits);
    Real acc(prec);
    for (const auto& [coeff, spec] : terms) {
        QuadratureResult r = integrate(spec, digits + 2);
        acc = add(acc, mul_rational(r.value, coeff));
    }
    return acc;
}

Real verify_identity(const std::string& id, long digits) {
    const IdentitySpec* spec = find_identity(id);
    if (spec == nullptr) throw std::invalid_argument("verify_identity: unknown id '" + id + "'");
    Real lhs = integrate_combination(spec->lhs, digits + 2);
    Real rhs = identity_rhs_value(*spec, digits + 2);
    return abs(sub(lhs, rhs));
}

}  // namespace malmsten
