#include <mzv/lindep/pslq.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace mzv
{

namespace
{

// Rounded dyadic arithmetic at a fixed working precision. Rounding errors are
// not tracked: PSLQ only needs approximate values, and every candidate it
// produces is re-checked in ball arithmetic.
class Fp
{
public:
    explicit Fp(std::int64_t prec) : prec_(prec) {}

    Dyadic add(const Dyadic &a, const Dyadic &b) const { return (a + b).round(prec_); }
    Dyadic sub(const Dyadic &a, const Dyadic &b) const { return (a - b).round(prec_); }
    Dyadic mul(const Dyadic &a, const Dyadic &b) const { return (a * b).round(prec_); }
    Dyadic div(const Dyadic &a, const Dyadic &b) const { return Dyadic::div(a, b, prec_); }
    Dyadic sqrt(const Dyadic &a) const { return Dyadic::sqrt(a, prec_); }
    Dyadic mul(const Dyadic &a, const Integer &n) const { return (a * Dyadic(n)).round(prec_); }

private:
    std::int64_t prec_;
};

using IntMatrix = std::vector<std::vector<Integer>>;
using FpMatrix = std::vector<std::vector<Dyadic>>;

IntMatrix identity(std::size_t n)
{
    IntMatrix m(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1;
    }
    return m;
}

std::int64_t max_bits(const IntMatrix &m)
{
    std::int64_t b = 0;
    for (const auto &row : m) {
        for (const auto &v : row) {
            b = std::max<std::int64_t>(b, static_cast<std::int64_t>(mpz_sizeinbase(v.get_mpz_t(), 2)));
        }
    }
    return b;
}

struct State {
    std::size_t n;
    Fp fp;
    std::vector<Dyadic> y;
    FpMatrix h; // n x (n-1), lower trapezoidal
    IntMatrix a;
    IntMatrix b;

    // Row i of H reduced against row j (j < i).
    void reduce_entry(std::size_t i, std::size_t j)
    {
        if (h[j][j].is_zero()) {
            return;
        }
        const Integer t = fp.div(h[i][j], h[j][j]).nearest_integer();
        if (t == 0) {
            return;
        }
        y[j] = fp.add(y[j], fp.mul(y[i], t));
        for (std::size_t k = 0; k <= j; ++k) {
            h[i][k] = fp.sub(h[i][k], fp.mul(h[j][k], t));
        }
        for (std::size_t k = 0; k < n; ++k) {
            a[i][k] -= t * a[j][k];
            b[k][j] += t * b[k][i];
        }
    }
};

} // namespace

Ball combination(std::span<const Integer> coefficients, std::span<const Ball> values, std::int64_t prec)
{
    const Arith ar(prec);
    Ball s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (coefficients[i] != 0) {
            s = ar.add(s, ar.mul(values[i], coefficients[i]));
        }
    }
    return s;
}

PslqResult pslq(std::span<const Ball> values, int max_coeff_bits)
{
    const std::size_t n = values.size();
    if (n < 2) {
        throw PslqError("pslq: need at least two values");
    }
    if (max_coeff_bits < 1) {
        throw PslqError("pslq: max_coeff_bits must be positive");
    }
    const std::int64_t required = static_cast<std::int64_t>(n) * max_coeff_bits + 64;
    std::int64_t data_prec = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < n; ++i) {
        if (values[i].contains_zero()) {
            throw DegenerateInput("pslq: value " + std::to_string(i) + " contains zero");
        }
        if (!values[i].radius_le_pow2(-required)) {
            throw InsufficientPrecision("pslq: value " + std::to_string(i) + " has radius above 2^-" +
                                        std::to_string(required) + "; evaluate the constants at higher precision");
        }
        if (!values[i].is_exact()) {
            data_prec = std::min(data_prec, -values[i].rad().log2_ceil());
        }
    }
    if (data_prec == std::numeric_limits<std::int64_t>::max()) {
        data_prec = required + 64;
    }
    const std::int64_t wp = data_prec + 32;
    State st{n, Fp(wp), {}, FpMatrix(n, std::vector<Dyadic>(n - 1)), identity(n), identity(n)};
    const Fp &fp = st.fp;

    // Normalized input and partial norms s_k = |(x_k, ..., x_{n-1})|.
    std::vector<Dyadic> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = values[i].mid();
    }
    std::vector<Dyadic> s(n);
    Dyadic acc;
    for (std::size_t k = n; k-- > 0;) {
        acc = fp.add(acc, fp.mul(x[k], x[k]));
        s[k] = fp.sqrt(acc);
    }
    const Dyadic t0 = s[0];
    st.y.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        st.y[k] = fp.div(x[k], t0);
        s[k] = fp.div(s[k], t0);
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
        st.h[j][j] = fp.div(s[j + 1], s[j]);
        const Dyadic denom = fp.mul(s[j], s[j + 1]);
        for (std::size_t i = j + 1; i < n; ++i) {
            st.h[i][j] = -fp.div(fp.mul(st.y[i], st.y[j]), denom);
        }
    }
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = i; j-- > 0;) {
            st.reduce_entry(i, j);
        }
    }

    const Dyadic gamma = fp.add(fp.sqrt(fp.div(Dyadic(4), Dyadic(3))), fp.div(Dyadic(1), Dyadic(100)));
    std::vector<Dyadic> gamma_pow(n);
    gamma_pow[0] = gamma;
    for (std::size_t i = 1; i < n; ++i) {
        gamma_pow[i] = fp.mul(gamma_pow[i - 1], gamma);
    }
    const std::int64_t detect_exp = -(data_prec - max_coeff_bits - 32);
    const Dyadic detect = Dyadic::pow2(detect_exp);
    const Dyadic bound_target = Dyadic::pow2(-max_coeff_bits);
    const std::size_t max_iterations = 200000;

    for (std::size_t iter = 1; iter <= max_iterations; ++iter) {
        std::size_t m = 0;
        Dyadic best;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const Dyadic v = fp.mul(gamma_pow[i], st.h[i][i].abs());
            if (i == 0 || v > best) {
                best = v;
                m = i;
            }
        }
        std::swap(st.y[m], st.y[m + 1]);
        std::swap(st.a[m], st.a[m + 1]);
        std::swap(st.h[m], st.h[m + 1]);
        for (std::size_t k = 0; k < n; ++k) {
            std::swap(st.b[k][m], st.b[k][m + 1]);
        }
        if (m + 2 < n) {
            const Dyadic &p = st.h[m][m];
            const Dyadic &q = st.h[m][m + 1];
            const Dyadic r = fp.sqrt(fp.add(fp.mul(p, p), fp.mul(q, q)));
            if (!r.is_zero()) {
                const Dyadic c1 = fp.div(p, r);
                const Dyadic c2 = fp.div(q, r);
                for (std::size_t i = m; i < n; ++i) {
                    const Dyadic u = st.h[i][m];
                    const Dyadic v = st.h[i][m + 1];
                    st.h[i][m] = fp.add(fp.mul(c1, u), fp.mul(c2, v));
                    st.h[i][m + 1] = fp.sub(fp.mul(c1, v), fp.mul(c2, u));
                }
            }
        }
        for (std::size_t i = m + 1; i < n; ++i) {
            for (std::size_t j = std::min(i - 1, m + 1) + 1; j-- > 0;) {
                st.reduce_entry(i, j);
            }
        }

        // Relation detected: the matching column of B.
        for (std::size_t i = 0; i < n; ++i) {
            if (st.y[i].abs() < detect) {
                RelationCandidate cand;
                for (std::size_t k = 0; k < n; ++k) {
                    cand.coefficients.push_back(st.b[k][i]);
                }
                const auto first = std::find_if(cand.coefficients.begin(), cand.coefficients.end(),
                                                [](const Integer &v) { return v != 0; });
                if (first != cand.coefficients.end() && sgn(*first) < 0) {
                    for (auto &v : cand.coefficients) {
                        v = -v;
                    }
                }
                cand.norm = 0;
                for (const auto &v : cand.coefficients) {
                    cand.norm = std::max(cand.norm, Integer(::abs(v)));
                }
                if (mpz_sizeinbase(cand.norm.get_mpz_t(), 2) > static_cast<std::size_t>(max_coeff_bits)) {
                    throw InsufficientPrecision("pslq: detected relation exceeds the coefficient bound; "
                                                "increase precision");
                }
                cand.residual = combination(cand.coefficients, values, wp);
                if (!cand.residual.contains_zero()) {
                    throw InsufficientPrecision("pslq: detected relation does not hold at the input precision");
                }
                return cand;
            }
        }

        Dyadic hmax;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            const Dyadic v = st.h[j][j].abs();
            if (v > hmax) {
                hmax = v;
            }
        }
        if (hmax <= bound_target) {
            NoRelationBelow nr;
            nr.bound_bits = max_coeff_bits;
            nr.achieved_log2 = hmax.is_zero() ? static_cast<double>(data_prec) : -std::log2(hmax.to_double());
            nr.iterations = iter;
            return nr;
        }
        if (max_bits(st.a) > data_prec - 16 || max_bits(st.b) > data_prec - 16) {
            throw InsufficientPrecision("pslq: precision exhausted before reaching the coefficient bound");
        }
    }
    throw InsufficientPrecision("pslq: iteration limit reached");
}

bool verify_candidate(const RelationCandidate &cand, std::span<const Ball> values_hi)
{
    if (cand.coefficients.size() != values_hi.size()) {
        return false;
    }
    std::int64_t prec = 64;
    for (const auto &v : values_hi) {
        if (!v.is_exact()) {
            prec = std::max(prec, -v.rad().log2_ceil() + 64);
        }
    }
    const Ball r = combination(cand.coefficients, values_hi, prec);
    return r.contains_zero();
}

ProbeResult probe(const std::function<std::vector<Ball>(std::int64_t)> &values_at, std::int64_t prec,
                  int max_coeff_bits)
{
    ProbeResult out;
    out.prec = prec;
    const auto values = values_at(prec);
    const PslqResult r = pslq(values, max_coeff_bits);
    if (const auto *nr = std::get_if<NoRelationBelow>(&r)) {
        out.status = ProbeStatus::no_relation;
        out.bound = *nr;
        return out;
    }
    const auto &cand = std::get<RelationCandidate>(r);
    const auto hi = values_at(2 * prec);
    if (verify_candidate(cand, hi)) {
        out.status = ProbeStatus::relation;
        out.relation = cand;
    } else {
        out.status = ProbeStatus::rejected;
        out.note = "candidate failed re-verification at " + std::to_string(2 * prec) + " bits";
    }
    return out;
}

std::string render_coefficients(std::span<const Integer> c)
{
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        s += (i ? ", " : "") + c[i].get_str();
    }
    return s + ")";
}

} // namespace mzv
