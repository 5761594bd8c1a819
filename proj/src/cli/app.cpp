#include <mzv/cli/app.hpp>

#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <mzv/cli/cache.hpp>
#include <mzv/cli/config.hpp>
#include <mzv/cli/verify.hpp>
#include <mzv/core/dims.hpp>
#include <mzv/core/enumerate.hpp>
#include <mzv/core/word.hpp>
#include <mzv/lindep/certificate.hpp>
#include <mzv/lindep/pslq.hpp>
#include <mzv/numeval/zeta.hpp>
#include <mzv/relations/products.hpp>
#include <mzv/relations/reduce.hpp>
#include <mzv/relations/relations.hpp>

namespace mzv::cli
{

namespace
{

using nlohmann::json;

class UsageError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

json sum_json(const IndexSum &s)
{
    json terms = json::array();
    for (const auto &[k, c] : s.terms()) {
        terms.push_back({{"index", k.to_string()}, {"coefficient", to_string(c)}});
    }
    return terms;
}

json ball_json(const Ball &b)
{
    return {{"decimal", b.to_decimal()},
            {"midpoint", b.mid().to_hex()},
            {"radius_man", b.rad().mantissa()},
            {"radius_exp", b.rad().exponent()}};
}

json coeffs_json(const std::vector<Integer> &c)
{
    json a = json::array();
    for (const auto &v : c) {
        a.push_back(v.get_str());
    }
    return a;
}

struct Context {
    Config cfg;
    std::ostream &out;
    std::ostream &err;
    std::optional<Cache> cache;

    bool json_mode() const { return cfg.output_mode == OutputMode::json; }

    void emit(const json &doc, const std::string &text) const
    {
        if (json_mode()) {
            out << doc.dump(2) << "\n";
        } else {
            out << text;
        }
    }

    // zeta(index) at prec, through the cache when one is configured.
    Ball zeta(const MzvIndex &index, std::int64_t prec, bool *hit = nullptr)
    {
        const std::string key = index.to_string();
        if (cache) {
            if (auto b = cache->get(key, prec)) {
                if (hit) {
                    *hit = true;
                }
                return *b;
            }
        }
        const Ball b = eval_mzv(index, EvalConfig::with_prec(prec));
        if (cache) {
            cache->put(CacheEntry{key, prec, b});
        }
        if (hit) {
            *hit = false;
        }
        return b;
    }

    void require_weight(std::uint64_t w) const
    {
        if (w < 2 || w > cfg.max_weight) {
            throw UsageError("weight " + std::to_string(w) + " outside 2.." + std::to_string(cfg.max_weight) +
                             " (raise --max-weight or MZV_MAX_WEIGHT)");
        }
    }
};

MzvIndex parse_index(const std::string &s)
{
    try {
        return MzvIndex::parse(s);
    } catch (const IndexError &e) {
        throw UsageError(std::string(e.what()) + " (write indices as 3,2,2)");
    }
}

MzvIndex parse_admissible(const std::string &s)
{
    MzvIndex i = parse_index(s);
    if (!i.admissible()) {
        throw UsageError("index " + i.to_display() + " is not admissible: the first part must be at least 2");
    }
    return i;
}

int cmd_eval(Context &ctx, const std::string &text, bool exact)
{
    const MzvIndex idx = parse_admissible(text);
    bool hit = false;
    const Ball b = ctx.zeta(idx, ctx.cfg.prec_bits, &hit);
    json doc = ball_json(b);
    doc["command"] = "eval";
    doc["index"] = idx.to_string();
    doc["prec_bits"] = ctx.cfg.prec_bits;
    doc["cached"] = hit;
    std::string s = "zeta" + idx.to_display() + " = " + b.to_decimal() + "\n";
    if (exact) {
        s += "  " + b.to_exact_string() + "\n";
        doc["exact"] = b.to_exact_string();
    }
    ctx.emit(doc, s);
    return exit_ok;
}

int cmd_product(Context &ctx, bool use_stuffle, bool use_shuffle, const std::string &u, const std::string &v)
{
    if (use_stuffle == use_shuffle) {
        throw UsageError("product: pass exactly one of --stuffle or --shuffle");
    }
    const MzvIndex a = parse_index(u);
    const MzvIndex b = parse_index(v);
    const IndexSum s = use_stuffle ? stuffle(a, b) : shuffle_indices(a, b);
    json doc{{"command", "product"},
             {"kind", use_stuffle ? "stuffle" : "shuffle"},
             {"u", a.to_string()},
             {"v", b.to_string()},
             {"terms", sum_json(s)},
             {"text", s.to_string()}};
    ctx.emit(doc, s.to_string() + "\n");
    return exit_ok;
}

int cmd_relations(Context &ctx, unsigned w, const std::string &families, bool check)
{
    ctx.require_weight(w);
    FamilySet fam = FamilySet::all();
    if (!families.empty()) {
        try {
            fam = FamilySet::parse(families);
        } catch (const std::invalid_argument &e) {
            throw UsageError(std::string(e.what()) + " (choose from fds,hoffman,duality)");
        }
    }
    const auto rels = generate_relations(w, fam, ctx.cfg.max_weight);
    std::ostringstream os;
    json arr = json::array();
    std::size_t nonzero = 0;
    std::size_t failed = 0;
    for (const auto &r : rels) {
        if (r.combo.empty()) {
            continue;
        }
        ++nonzero;
        json item{{"family", std::string(family_name(r.family))}, {"provenance", r.provenance}, {"terms", sum_json(r.combo)}};
        os << r.provenance << ": " << r.combo.to_dump();
        if (check) {
            const bool ok = eval_formal(r.combo, EvalConfig::with_prec(ctx.cfg.prec_bits)).contains_zero();
            failed += ok ? 0 : 1;
            item["numeric_zero"] = ok;
            os << (ok ? "  [0 ok]" : "  [NONZERO]");
        }
        os << "\n";
        arr.push_back(std::move(item));
    }
    os << nonzero << " nonzero relations of " << rels.size() << " generated (" << fam.to_string() << ", weight " << w
       << ")\n";
    json doc{{"command", "relations"}, {"weight", w}, {"families", fam.to_string()}, {"generated", rels.size()},
             {"relations", arr}};
    ctx.emit(doc, os.str());
    return failed == 0 ? exit_ok : exit_no_result;
}

int cmd_bound(Context &ctx, unsigned w)
{
    ctx.require_weight(w);
    const auto r = dimension_bound(w, ctx.cfg.max_weight);
    json doc{{"command", "bound"},           {"weight", w},           {"unknowns", r.num_unknowns},
             {"relations", r.num_relations}, {"rank", r.rank},        {"upper_bound", r.upper_bound},
             {"d_w", r.conjectured},         {"matches", r.matches_conjecture}};
    std::ostringstream os;
    os << "weight " << w << ": " << r.num_unknowns << " admissible indices, " << r.num_relations << " relations, rank "
       << r.rank << "\n";
    os << "upper bound " << r.upper_bound << ", d_w = " << r.conjectured
       << (r.matches_conjecture ? " (equal)" : " (differs)") << "\n";
    ctx.emit(doc, os.str());
    return exit_ok;
}

int cmd_reduce(Context &ctx, const std::string &text)
{
    const MzvIndex idx = parse_admissible(text);
    ctx.require_weight(idx.weight());
    const auto r = hoffman_reduce(idx, ctx.cfg.max_weight);
    if (const auto *ne = std::get_if<NotExpressible>(&r)) {
        ctx.emit({{"command", "reduce"}, {"index", idx.to_string()}, {"expressible", false}, {"reason", ne->reason}},
                 idx.to_display() + " is not expressible in the Hoffman basis: " + ne->reason + "\n");
        return exit_no_result;
    }
    const auto &red = std::get<Reduction>(r);
    const IndexSum s = red.as_sum();
    json doc{{"command", "reduce"},     {"index", idx.to_string()}, {"expressible", true},
             {"terms", sum_json(s)},    {"text", s.to_string()},
             {"residual", ball_json(red.residual_check)}};
    ctx.emit(doc, idx.to_display() + " = " + s.to_string() + "\n  residual " + red.residual_check.to_decimal(20) +
                      " contains 0\n");
    return exit_ok;
}

int cmd_dims(Context &ctx, unsigned wmax)
{
    const auto d = d_sequence(wmax);
    std::string s;
    json arr = json::array();
    for (const auto &v : d.values) {
        s += (s.empty() ? "" : " ") + v.get_str();
        arr.push_back(v.get_str());
    }
    ctx.emit({{"command", "dims"}, {"max", wmax}, {"values", arr}}, s + "\n");
    return exit_ok;
}

std::vector<std::optional<MzvIndex>> parse_index_list(const std::string &text)
{
    std::vector<std::optional<MzvIndex>> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        tok.erase(0, tok.find_first_not_of(" \t"));
        tok.erase(tok.find_last_not_of(" \t") + 1);
        if (tok == "1") {
            out.emplace_back(std::nullopt); // the constant 1
        } else {
            out.emplace_back(parse_admissible(tok));
        }
    }
    if (out.size() < 2) {
        throw UsageError("pslq: give at least two entries separated by ';', e.g. --indices \"2,1;3\"");
    }
    return out;
}

int cmd_pslq(Context &ctx, const std::string &indices)
{
    const auto ids = parse_index_list(indices);
    auto values = [&](std::int64_t p) {
        std::vector<Ball> v;
        for (const auto &i : ids) {
            v.push_back(i ? ctx.zeta(*i, p) : Ball(1));
        }
        return v;
    };
    std::vector<std::string> names;
    for (const auto &i : ids) {
        names.push_back(i ? "zeta" + i->to_display() : "1");
    }
    ProbeResult r;
    try {
        r = probe(values, ctx.cfg.prec_bits, ctx.cfg.max_coeff_bits);
    } catch (const InsufficientPrecision &e) {
        throw UsageError(std::string(e.what()) + " (need --prec above " +
                         std::to_string(static_cast<std::int64_t>(ids.size()) * ctx.cfg.max_coeff_bits + 64) +
                         " or a smaller --max-coeff-bits)");
    }
    json doc{{"command", "pslq"}, {"values", names}, {"prec_bits", ctx.cfg.prec_bits},
             {"max_coeff_bits", ctx.cfg.max_coeff_bits}};
    std::string s;
    switch (r.status) {
    case ProbeStatus::relation:
        doc["status"] = "relation";
        doc["coefficients"] = coeffs_json(r.relation->coefficients);
        s = "relation " + render_coefficients(r.relation->coefficients) + "\n";
        break;
    case ProbeStatus::no_relation:
        doc["status"] = "no_relation";
        doc["iterations"] = r.bound->iterations;
        s = "no relation with coefficients below 2^" + std::to_string(r.bound->bound_bits) + "\n";
        break;
    case ProbeStatus::rejected:
        doc["status"] = "rejected";
        doc["note"] = r.note;
        s = "candidate rejected: " + r.note + "\n";
        break;
    }
    std::string header;
    for (std::size_t i = 0; i < names.size(); ++i) {
        header += (i ? ", " : "") + names[i];
    }
    ctx.emit(doc, "(" + header + ")\n" + s);
    return r.status == ProbeStatus::relation ? exit_ok : exit_no_result;
}

json outcome_json(const TupleOutcome &t)
{
    json j{{"ks", t.ks}};
    switch (t.status) {
    case ProbeStatus::no_relation:
        j["status"] = "no_relation";
        j["bound_bits"] = t.bound->bound_bits;
        break;
    case ProbeStatus::relation:
        j["status"] = "relation";
        j["coefficients"] = coeffs_json(t.relation->coefficients);
        break;
    case ProbeStatus::rejected:
        j["status"] = "rejected";
        break;
    }
    return j;
}

json certificate_json(const IndependenceCertificate &c)
{
    json products = json::array();
    for (const auto &p : c.products_used) {
        products.push_back({{"k", p.k}, {"terms", sum_json(p.rhs)}, {"matches_stuffle", p.matches_stuffle},
                            {"numeric_ok", p.numeric_ok}});
    }
    json outcomes = json::array();
    for (const auto &t : c.outcomes) {
        outcomes.push_back(outcome_json(t));
    }
    std::vector<std::string> vectors;
    for (const auto &v : c.vectors) {
        vectors.push_back(v.to_string());
    }
    std::vector<std::string> cands;
    for (const auto &v : c.candidate_set) {
        cands.push_back(v.to_string());
    }
    json j{{"command", "certify"},   {"l", c.l},
           {"precision", c.precision}, {"coeff_bound_bits", c.coeff_bound_bits},
           {"found", c.found},         {"subset_I", c.subset_I},
           {"vectors", vectors},       {"vector_notes", c.vector_notes},
           {"candidate_set", cands},   {"products_used", products},
           {"pslq_outcomes", outcomes}, {"disclaimer", certificate_disclaimer}};
    if (c.vector_check) {
        j["vector_check"] = outcome_json(*c.vector_check);
    }
    return j;
}

int cmd_certify(Context &ctx, unsigned l)
{
    if (l == 0) {
        throw UsageError("certify: --l must be at least 1");
    }
    IndependenceCertificate c;
    try {
        c = certify_corollary(l, ctx.cfg.prec_bits, ctx.cfg.max_coeff_bits);
    } catch (const InsufficientPrecision &e) {
        throw UsageError(std::string(e.what()) + " (need --prec above " +
                         std::to_string(static_cast<std::int64_t>(l + 2) * ctx.cfg.max_coeff_bits + 64) + ")");
    }
    ctx.emit(certificate_json(c), c.render_text());
    return c.found ? exit_ok : exit_no_result;
}

int cmd_verify(Context &ctx, std::uint64_t seed)
{
    BatteryOptions opts;
    opts.seed = seed;
    const auto results = run_battery(opts);
    json arr = json::array();
    int passed = 0;
    for (const auto &r : results) {
        arr.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        passed += r.passed ? 1 : 0;
    }
    ctx.emit({{"command", "verify-paper"}, {"results", arr}, {"passed", passed}, {"total", results.size()}},
             render_battery(results));
    return passed == static_cast<int>(results.size()) ? exit_ok : exit_no_result;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    std::vector<const char *> argv{"mzv"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Multiple zeta values: evaluation, relations, reduction and integer-relation probes", "mzv"};
    app.require_subcommand(1);
    app.fallthrough();

    std::int64_t prec = 0;
    unsigned max_weight = 0;
    int max_coeff_bits = 0;
    std::string cache_path;
    std::string output;
    bool json_flag = false;
    auto *prec_opt = app.add_option("--prec", prec, "absolute precision: results carry radius 2^-P (default 128, env MZV_PREC)");
    auto *mw_opt = app.add_option("--max-weight", max_weight, "largest weight for relation work (default 12)");
    auto *mc_opt = app.add_option("--max-coeff-bits", max_coeff_bits, "PSLQ coefficient bound in bits (default 32)");
    auto *cache_opt = app.add_option("--cache", cache_path, "JSONL cache of evaluated values (env MZV_CACHE)");
    auto *out_opt = app.add_option("--output", output, "text or json (env MZV_OUTPUT)");
    app.add_flag("--json", json_flag, "same as --output json");

    std::string index_text;
    bool exact = false;
    auto *eval = app.add_subcommand("eval", "evaluate zeta(index) with a guaranteed error bound");
    eval->add_option("index", index_text, "admissible index, e.g. 3,2")->required();
    eval->add_flag("--exact", exact, "also print the exact midpoint and radius");

    bool use_stuffle = false;
    bool use_shuffle = false;
    std::string u_text, v_text;
    auto *product = app.add_subcommand("product", "expand a stuffle or shuffle product of two indices");
    product->add_flag("--stuffle", use_stuffle);
    product->add_flag("--shuffle", use_shuffle);
    product->add_option("u", u_text)->required();
    product->add_option("v", v_text)->required();

    unsigned weight = 0;
    std::string families;
    bool check = false;
    auto *relations = app.add_subcommand("relations", "list the relations generated at one weight");
    relations->add_option("--weight", weight)->required();
    relations->add_option("--families", families, "subset of fds,hoffman,duality");
    relations->add_flag("--check", check, "evaluate each relation numerically");

    auto *bound = app.add_subcommand("bound", "upper bound for the dimension at one weight");
    bound->add_option("--weight", weight)->required();

    auto *reduce = app.add_subcommand("reduce", "express zeta(index) in the Hoffman basis");
    reduce->add_option("index", index_text)->required();

    unsigned dims_max = 0;
    auto *dims = app.add_subcommand("dims", "print d_0 .. d_max");
    dims->add_option("--max", dims_max)->required()->check(CLI::Range(0U, 100000U));

    std::string pslq_indices;
    auto *pslq_cmd = app.add_subcommand("pslq", "search for an integer relation among zeta values");
    pslq_cmd->add_option("--indices", pslq_indices, "';'-separated indices; '1' is the constant 1")->required();

    unsigned cert_l = 0;
    auto *certify = app.add_subcommand("certify", "experimental independence certificate for products zeta(3)zeta(2k)");
    certify->add_option("--l", cert_l)->required();

    std::uint64_t seed = BatteryOptions{}.seed;
    auto *verify = app.add_subcommand("verify-paper", "run the acceptance battery");
    verify->add_option("--seed", seed, "seed for the randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        Config cfg = apply_env(Config{});
        if (*prec_opt) {
            cfg.prec_bits = prec;
        }
        if (*mw_opt) {
            cfg.max_weight = max_weight;
        }
        if (*mc_opt) {
            cfg.max_coeff_bits = max_coeff_bits;
        }
        if (*cache_opt) {
            cfg.cache_path = cache_path;
        }
        if (*out_opt) {
            cfg.output_mode = parse_output_mode(output);
        }
        if (json_flag) {
            cfg.output_mode = OutputMode::json;
        }
        cfg.validate();

        Context ctx{cfg, out, err, std::nullopt};
        if (!cfg.cache_path.empty()) {
            ctx.cache.emplace(cfg.cache_path);
            for (const auto &w : ctx.cache->warnings()) {
                err << "warning: " << w << "\n";
            }
        }

        if (*eval) {
            return cmd_eval(ctx, index_text, exact);
        }
        if (*product) {
            return cmd_product(ctx, use_stuffle, use_shuffle, u_text, v_text);
        }
        if (*relations) {
            return cmd_relations(ctx, weight, families, check);
        }
        if (*bound) {
            return cmd_bound(ctx, weight);
        }
        if (*reduce) {
            return cmd_reduce(ctx, index_text);
        }
        if (*dims) {
            return cmd_dims(ctx, dims_max);
        }
        if (*pslq_cmd) {
            return cmd_pslq(ctx, pslq_indices);
        }
        if (*certify) {
            return cmd_certify(ctx, cert_l);
        }
        if (*verify) {
            return cmd_verify(ctx, seed);
        }
        return exit_usage;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const IndexError &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const WeightRangeError &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const DegenerateInput &e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}

namespace
{

enum class T { string, integer, boolean, array, object, number };

bool has_type(const json &v, T t)
{
    switch (t) {
    case T::string: return v.is_string();
    case T::integer: return v.is_number_integer();
    case T::boolean: return v.is_boolean();
    case T::array: return v.is_array();
    case T::object: return v.is_object();
    case T::number: return v.is_number();
    }
    return false;
}

const std::map<std::string, std::vector<std::pair<std::string, T>>> &schemas()
{
    static const std::map<std::string, std::vector<std::pair<std::string, T>>> s{
        {"eval",
         {{"index", T::string}, {"prec_bits", T::integer}, {"decimal", T::string}, {"midpoint", T::string},
          {"radius_man", T::integer}, {"radius_exp", T::integer}, {"cached", T::boolean}}},
        {"product", {{"kind", T::string}, {"u", T::string}, {"v", T::string}, {"terms", T::array}, {"text", T::string}}},
        {"relations", {{"weight", T::integer}, {"families", T::string}, {"generated", T::integer}, {"relations", T::array}}},
        {"bound",
         {{"weight", T::integer}, {"unknowns", T::integer}, {"relations", T::integer}, {"rank", T::integer},
          {"upper_bound", T::integer}, {"d_w", T::integer}, {"matches", T::boolean}}},
        {"reduce", {{"index", T::string}, {"expressible", T::boolean}}},
        {"dims", {{"max", T::integer}, {"values", T::array}}},
        {"pslq", {{"values", T::array}, {"prec_bits", T::integer}, {"max_coeff_bits", T::integer}, {"status", T::string}}},
        {"certify",
         {{"l", T::integer}, {"precision", T::integer}, {"coeff_bound_bits", T::integer}, {"found", T::boolean},
          {"subset_I", T::array}, {"vectors", T::array}, {"candidate_set", T::array}, {"products_used", T::array},
          {"pslq_outcomes", T::array}, {"disclaimer", T::string}}},
        {"verify-paper", {{"results", T::array}, {"passed", T::integer}, {"total", T::integer}}},
    };
    return s;
}

} // namespace

std::vector<std::string> json_schema_errors(const nlohmann::json &doc)
{
    std::vector<std::string> errs;
    if (!doc.is_object() || !doc.contains("command") || !doc["command"].is_string()) {
        return {"missing string field 'command'"};
    }
    const auto cmd = doc["command"].get<std::string>();
    const auto it = schemas().find(cmd);
    if (it == schemas().end()) {
        return {"unknown command '" + cmd + "'"};
    }
    for (const auto &[key, type] : it->second) {
        if (!doc.contains(key)) {
            errs.push_back(cmd + ": missing field '" + key + "'");
        } else if (!has_type(doc[key], type)) {
            errs.push_back(cmd + ": field '" + key + "' has the wrong type");
        }
    }
    auto check_terms = [&](const json &terms, const std::string &where) {
        for (const auto &t : terms) {
            if (!t.is_object() || !t.contains("index") || !t["index"].is_string() || !t.contains("coefficient") ||
                !t["coefficient"].is_string()) {
                errs.push_back(where + ": malformed term");
            }
        }
    };
    if (doc.contains("terms") && doc["terms"].is_array()) {
        check_terms(doc["terms"], cmd);
    }
    if (cmd == "reduce" && doc.value("expressible", false)) {
        if (!doc.contains("terms") || !doc["terms"].is_array() || !doc.contains("residual")) {
            errs.push_back("reduce: expressible result lacks terms or residual");
        }
    }
    if (cmd == "pslq" && doc.value("status", "") == "relation" &&
        (!doc.contains("coefficients") || !doc["coefficients"].is_array() ||
         doc["coefficients"].size() != doc["values"].size())) {
        errs.push_back("pslq: relation without matching coefficients");
    }
    if (cmd == "verify-paper" && doc.contains("results") && doc["results"].is_array()) {
        for (const auto &r : doc["results"]) {
            if (!r.contains("id") || !r.contains("passed") || !r["passed"].is_boolean()) {
                errs.push_back("verify-paper: malformed result entry");
            }
        }
    }
    return errs;
}

} // namespace mzv::cli
