#include "forge/json_io.hpp"

#include <algorithm>

#include "forge/error.hpp"

namespace forge {

namespace {

long to_long(const Int& x) { return static_cast<long>(x.get_si()); }

unsigned long require_ulong(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw Error("bad-json", std::string("missing or non-integer field '") + key + "'");
    long long v = j.at(key).get<long long>();
    if (v < 0) throw Error("bad-json", std::string("field '") + key + "' must be nonnegative");
    return static_cast<unsigned long>(v);
}

}  // namespace

Json vec_to_json(const IntVec& v) {
    Json arr = Json::array();
    for (const Int& x : v) arr.push_back(to_long(x));
    return arr;
}

IntVec vec_from_json(const Json& j) {
    if (!j.is_array()) throw Error("bad-json", "expected an array of integers");
    IntVec v;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw Error("bad-json", "expected an integer entry");
        v.emplace_back(e.get<long>());
    }
    return v;
}

Json vectors_to_json(const std::vector<IntVec>& vs) {
    Json arr = Json::array();
    for (const IntVec& v : vs) arr.push_back(vec_to_json(v));
    return arr;
}

Json semigroup_to_json(const AffineSemigroup& gamma) {
    Json j;
    j["ambient_dim"] = gamma.ambient_dim();
    j["generators"] = vectors_to_json(gamma.gens());
    return j;
}

AffineSemigroup semigroup_from_json(const Json& j) {
    if (!j.contains("generators")) throw Error("bad-json", "missing field 'generators'");
    std::vector<IntVec> gens;
    for (const auto& g : j.at("generators")) gens.push_back(vec_from_json(g));
    AffineSemigroup gamma(std::move(gens));
    if (j.contains("ambient_dim") &&
        require_ulong(j, "ambient_dim") != gamma.ambient_dim())
        throw Error("bad-json", "ambient_dim does not match the generators");
    return gamma;
}

AffineSemigroup family_from_json(const Json& j) {
    if (!j.is_object()) throw Error("bad-json", "expected a JSON object");
    if (!j.contains("family")) return semigroup_from_json(j);
    const std::string family = j.at("family").get<std::string>();
    if (family == "gap") {
        GapSpec spec;
        spec.a = vec_from_json(j.at("a"));
        spec.d = vec_from_json(j.at("d"));
        spec.h = require_ulong(j, "h");
        spec.n = require_ulong(j, "n");
        return gap_semigroup(spec);
    }
    if (family == "join") {
        AffineSemigroup left = family_from_json(j.at("left"));
        AffineSemigroup right = family_from_json(j.at("right"));
        return join(left, right);
    }
    if (family == "backelin")
        return backelin_projective(require_ulong(j, "n"), require_ulong(j, "r"));
    throw Error("bad-json", "unknown family '" + family + "'");
}

Json ideal_to_json(const BinomialIdeal& ideal) {
    Json j;
    j["variables"] = ideal.context.names;
    Json degs = Json::array();
    for (const IntVec& d : ideal.context.degree_map) degs.push_back(vec_to_json(d));
    j["degree_map"] = degs;
    Json bins = Json::array();
    for (const Binomial& b : ideal.gens) {
        Json e;
        e["plus"] = b.plus;
        e["minus"] = b.minus;
        bins.push_back(e);
    }
    j["binomials"] = bins;
    return j;
}

BinomialIdeal ideal_from_json(const Json& j) {
    BinomialIdeal ideal;
    if (!j.contains("variables")) throw Error("bad-json", "missing field 'variables'");
    ideal.context.names = j.at("variables").get<std::vector<std::string>>();
    const std::size_t nvars = ideal.context.names.size();
    if (j.contains("degree_map"))
        for (const auto& d : j.at("degree_map"))
            ideal.context.degree_map.push_back(vec_from_json(d));
    if (!ideal.context.degree_map.empty() && ideal.context.degree_map.size() != nvars)
        throw Error("bad-json", "degree_map length does not match the variables");
    for (const auto& e : j.value("binomials", Json::array())) {
        Binomial b;
        b.plus = e.at("plus").get<Monomial>();
        b.minus = e.at("minus").get<Monomial>();
        if (b.plus.size() != nvars || b.minus.size() != nvars)
            throw Error("bad-json", "exponent vector length does not match the variables");
        ideal.gens.push_back(b);
    }
    return ideal;
}

namespace {

const char* kind_name(OrderKind kind) {
    switch (kind) {
        case OrderKind::Lex: return "lex";
        case OrderKind::DegRevLex: return "degrevlex";
        case OrderKind::NegDegRevLex: return "neg_degrevlex";
        case OrderKind::BlockElim: return "block_elim";
    }
    return "degrevlex";
}

OrderKind kind_from_name(const std::string& name) {
    if (name == "lex") return OrderKind::Lex;
    if (name == "degrevlex") return OrderKind::DegRevLex;
    if (name == "neg_degrevlex") return OrderKind::NegDegRevLex;
    if (name == "block_elim") return OrderKind::BlockElim;
    throw Error("bad-json", "unknown order kind '" + name + "'");
}

}  // namespace

Json order_to_json(const MonomialOrder& order, const VarContext& context) {
    Json j;
    j["kind"] = kind_name(order.kind);
    Json perm = Json::array();
    for (std::size_t i : order.var_permutation) perm.push_back(context.names.at(i));
    j["permutation"] = perm;
    if (order.kind == OrderKind::BlockElim) j["block_boundary"] = order.block_boundary;
    return j;
}

MonomialOrder order_from_json(const Json& j, const VarContext& context) {
    MonomialOrder order;
    order.kind = kind_from_name(j.at("kind").get<std::string>());
    if (j.contains("permutation")) {
        for (const auto& e : j.at("permutation")) {
            const std::string name = e.get<std::string>();
            auto it = std::find(context.names.begin(), context.names.end(), name);
            if (it == context.names.end())
                throw Error("bad-json", "unknown variable '" + name + "' in permutation");
            order.var_permutation.push_back(
                static_cast<std::size_t>(it - context.names.begin()));
        }
        if (order.var_permutation.size() != context.size())
            throw Error("bad-json", "permutation must list every variable once");
        auto sorted = order.var_permutation;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != i)
                throw Error("bad-json", "permutation must list every variable once");
    } else {
        for (std::size_t i = 0; i < context.size(); ++i) order.var_permutation.push_back(i);
    }
    if (order.kind == OrderKind::BlockElim)
        order.block_boundary = require_ulong(j, "block_boundary");
    return order;
}

Json betti_to_json(const BettiTable& table) {
    Json j;
    Json entries = Json::array();
    for (const auto& [key, rank] : table.entries) {
        Json e;
        e["i"] = key.first;
        e["degree"] = vec_to_json(key.second);
        e["rank"] = rank;
        entries.push_back(e);
    }
    j["entries"] = entries;
    j["totals"] = table.totals();
    return j;
}

Json complex_to_json(const GradedFreeComplex& c) {
    Json j;
    j["variables"] = c.context.names;
    j["ranks"] = c.ranks;
    Json diffs = Json::array();
    for (const auto& mat : c.differentials) {
        Json entries = Json::array();
        for (std::size_t row = 0; row < mat.size(); ++row) {
            for (std::size_t col = 0; col < mat[row].size(); ++col) {
                const Poly& f = mat[row][col];
                if (f.is_zero()) continue;
                Json terms = Json::array();
                for (const auto& [m, coeff] : f.terms()) {
                    Json t;
                    t["coeff"] = to_long(coeff);
                    t["exponents"] = m;
                    terms.push_back(t);
                }
                entries.push_back({{"row", row}, {"col", col}, {"terms", terms}});
            }
        }
        diffs.push_back(entries);
    }
    j["differentials"] = diffs;
    if (!c.degrees.empty()) {
        Json degs = Json::array();
        for (const auto& level : c.degrees) degs.push_back(vectors_to_json(level));
        j["degrees"] = degs;
    }
    return j;
}

}  // namespace forge
