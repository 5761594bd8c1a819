#include <mzv/lindep/certificate.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <mzv/core/enumerate.hpp>
#include <mzv/numeval/zeta.hpp>
#include <mzv/relations/products.hpp>
#include <mzv/relations/reduce.hpp>

namespace mzv
{

namespace
{

std::vector<std::vector<unsigned>> l_subsets(unsigned n, unsigned l)
{
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto &&self, unsigned start) -> void {
        if (cur.size() == l) {
            out.push_back(cur);
            return;
        }
        for (unsigned k = start; k <= n; ++k) {
            cur.push_back(k);
            self(self, k + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

TupleOutcome run_tuple(std::vector<unsigned> ks, const std::function<std::vector<Ball>(std::int64_t)> &values,
                       std::int64_t prec, int bound)
{
    TupleOutcome t;
    t.ks = std::move(ks);
    ProbeResult r = probe(values, prec, bound);
    t.status = r.status;
    t.bound = r.bound;
    t.relation = r.relation;
    return t;
}

std::pair<MzvIndex, std::string> pick_vector(const ProductIdentity &p)
{
    const unsigned w = 2 * p.k + 3;
    const auto basis = enumerate_hoffman(w);
    if (w > certificate_reduction_cap) {
        return {basis.front(), "weight " + std::to_string(w) + " above reduction cap; first Hoffman index"};
    }
    IndexSum total;
    for (const auto &[idx, c] : p.rhs.terms()) {
        const auto r = hoffman_reduce(idx);
        if (const auto *ne = std::get_if<NotExpressible>(&r)) {
            return {basis.front(), "reduction failed (" + ne->reason + "); first Hoffman index"};
        }
        total += std::get<Reduction>(r).as_sum().scaled(c);
    }
    const MzvIndex *best = nullptr;
    Rational best_abs = 0;
    for (const auto &b : basis) {
        const Rational a = abs(total.coefficient(b));
        if (a > best_abs) {
            best_abs = a;
            best = &b;
        }
    }
    if (best == nullptr) {
        return {basis.front(), "product reduced to 0; first Hoffman index"};
    }
    return {*best, "largest coefficient " + to_string(total.coefficient(*best)) + " in " + total.to_string()};
}

} // namespace

std::vector<ProductIdentity> corollary_products(unsigned l)
{
    if (l == 0) {
        throw std::invalid_argument("corollary_products: l must be at least 1");
    }
    std::vector<ProductIdentity> out;
    for (unsigned k = 1; k <= l + 1; ++k) {
        ProductIdentity p;
        p.k = k;
        p.rhs.add(MzvIndex{2 * k + 3}, 1);
        p.rhs.add(MzvIndex{3, 2 * k}, 1);
        p.rhs.add(MzvIndex{2 * k, 3}, 1);
        p.matches_stuffle = p.rhs == stuffle(MzvIndex{3}, MzvIndex{2 * k});
        out.push_back(std::move(p));
    }
    return out;
}

IndependenceCertificate certify_corollary(unsigned l, std::int64_t prec, int coeff_bound_bits, bool check_vectors)
{
    IndependenceCertificate cert;
    cert.l = l;
    cert.precision = prec;
    cert.coeff_bound_bits = coeff_bound_bits;
    cert.products_used = corollary_products(l);

    const EvalConfig base;
    auto product_at = [&](unsigned k, std::int64_t p) {
        const EvalConfig cfg = base.with_prec(p);
        return Arith(p + 16).mul(eval_mzv(MzvIndex{3}, cfg), eval_mzv(MzvIndex{2 * k}, cfg));
    };
    for (auto &pi : cert.products_used) {
        if (!pi.matches_stuffle) {
            throw std::logic_error("certify_corollary: product identity for k=" + std::to_string(pi.k) +
                                   " disagrees with the stuffle product");
        }
        pi.product = product_at(pi.k, prec);
        pi.expanded = eval_formal(pi.rhs, base.with_prec(prec));
        pi.numeric_ok = pi.product.overlaps(pi.expanded);
        if (!pi.numeric_ok) {
            throw std::logic_error("certify_corollary: product identity for k=" + std::to_string(pi.k) +
                                   " fails numerically");
        }
    }
    for (unsigned w = 5; w <= 2 * l + 5; w += 2) {
        for (auto &b : enumerate_hoffman(w)) {
            cert.candidate_set.push_back(std::move(b));
        }
    }

    for (auto &ks : l_subsets(l + 1, l)) {
        auto values = [&](std::int64_t p) {
            std::vector<Ball> v{Ball(1), eval_mzv(MzvIndex{3}, base.with_prec(p))};
            for (const auto k : ks) {
                v.push_back(product_at(k, p));
            }
            return v;
        };
        cert.outcomes.push_back(run_tuple(ks, values, prec, coeff_bound_bits));
        if (cert.outcomes.back().status == ProbeStatus::no_relation) {
            cert.found = true;
            for (const auto k : ks) {
                cert.subset_I.push_back(2 * k + 3);
                auto [t, note] = pick_vector(cert.products_used[k - 1]);
                cert.vectors.push_back(std::move(t));
                cert.vector_notes.push_back(std::move(note));
            }
            break;
        }
    }

    if (cert.found && check_vectors) {
        auto values = [&](std::int64_t p) {
            std::vector<Ball> v{Ball(1), eval_mzv(MzvIndex{3}, base.with_prec(p))};
            for (const auto &t : cert.vectors) {
                v.push_back(eval_mzv(t, base.with_prec(p)));
            }
            return v;
        };
        cert.vector_check = run_tuple({}, values, prec, coeff_bound_bits);
    }
    return cert;
}

namespace
{

std::string describe(const TupleOutcome &t)
{
    switch (t.status) {
    case ProbeStatus::no_relation:
        return "no relation with coefficients below 2^" + std::to_string(t.bound->bound_bits) + " (" +
               std::to_string(t.bound->iterations) + " iterations)";
    case ProbeStatus::relation:
        return "relation " + render_coefficients(t.relation->coefficients);
    case ProbeStatus::rejected:
        break;
    }
    return "candidate rejected at doubled precision";
}

template <class T> std::string join(const std::vector<T> &v, const char *sep)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? sep : "") << v[i];
    }
    return os.str();
}

} // namespace

std::string IndependenceCertificate::render_text() const
{
    std::ostringstream os;
    os << "independence certificate, l = " << l << "\n";
    os << "precision: " << precision << " bits, coefficient bound: 2^" << coeff_bound_bits << "\n";
    os << "products:\n";
    for (const auto &p : products_used) {
        os << "  zeta(3) zeta(" << 2 * p.k << ") = " << p.rhs.to_string() << "  [stuffle "
           << (p.matches_stuffle ? "ok" : "MISMATCH") << ", numeric " << (p.numeric_ok ? "ok" : "FAIL") << "]\n";
    }
    os << "tuples tried:\n";
    for (const auto &t : outcomes) {
        os << "  {1, zeta(3)";
        for (const auto k : t.ks) {
            os << ", zeta(3)zeta(" << 2 * k << ")";
        }
        os << "}: " << describe(t) << "\n";
    }
    if (found) {
        os << "I = {" << join(subset_I, ", ") << "}\n";
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            os << "  t_" << subset_I[i] << " = " << vectors[i].to_display() << "  (" << vector_notes[i] << ")\n";
        }
        if (vector_check) {
            os << "  {1, zeta(3), zeta(t_i)}: " << describe(*vector_check) << "\n";
        }
    } else {
        os << "no tuple without a small relation was found\n";
    }
    std::vector<std::string> cs;
    for (const auto &c : candidate_set) {
        cs.push_back(c.to_display());
    }
    os << "candidate set: {" << join(cs, ", ") << "}\n";
    os << certificate_disclaimer << "\n";
    return os.str();
}

} // namespace mzv
