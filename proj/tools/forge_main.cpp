#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "forge/betti.hpp"
#include "forge/complex.hpp"
#include "forge/constructors.hpp"
#include "forge/error.hpp"
#include "forge/json_io.hpp"
#include "forge/verify.hpp"

namespace {

using forge::Json;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

bool is_cap_error(const forge::Error& e) {
    return e.code() == "iteration-cap-exceeded" || e.code() == "apery-bound-exceeded";
}

struct Common {
    std::string format = "json";
    unsigned long seed = 0;
    std::size_t cap = forge::kDefaultCompletionCap;
    std::size_t apery_cap = 1000000;
    bool slow = false;

    // Input selectors (not every subcommand uses every one).
    std::string spec_file;
    std::string semigroup_file;
    std::string ideal_file;
    std::string order_file;
    std::string family;
    std::vector<long> a, d;
    unsigned long h = 1, n = 0, r = 0;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "text", "csv"}));
    cmd->add_option("--seed", c.seed, "Seed for randomized checks");
    cmd->add_option("--cap", c.cap, "Iteration cap for basis computations");
    cmd->add_option("--apery-cap", c.apery_cap, "Node cap for Apery enumeration");
    cmd->add_flag("--slow", c.slow, "Enable slow checks");
}

void add_semigroup_inputs(CLI::App* cmd, Common& c) {
    // Long-only help so the plain `--h` family parameter stays available.
    cmd->set_help_flag("--help", "Print help");
    cmd->add_option("--spec", c.spec_file, "Family spec JSON file");
    cmd->add_option("--semigroup", c.semigroup_file, "Semigroup JSON file");
    cmd->add_option("--family", c.family, "Inline family: gap or backelin");
    cmd->add_option("--a", c.a, "gap: vector a (comma separated)")->delimiter(',');
    cmd->add_option("--d", c.d, "gap: vector d (comma separated)")->delimiter(',');
    cmd->add_option("--h", c.h, "gap: multiplier h");
    cmd->add_option("--n", c.n, "gap/backelin: length parameter n");
    cmd->add_option("--r", c.r, "backelin: parameter r");
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw forge::Error("bad-json", "cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw forge::Error("bad-json", path + ": " + e.what());
    }
    return j;
}

forge::IntVec to_intvec(const std::vector<long>& xs) {
    forge::IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

forge::AffineSemigroup load_semigroup(const Common& c) {
    if (!c.spec_file.empty()) return forge::family_from_json(load_json(c.spec_file));
    if (!c.semigroup_file.empty())
        return forge::semigroup_from_json(load_json(c.semigroup_file));
    if (c.family == "gap") {
        if (c.a.empty() || c.d.empty() || c.n < 2)
            throw forge::Error("usage", "--family gap needs --a, --d, --n (and --h)");
        forge::GapSpec spec{to_intvec(c.a), to_intvec(c.d), c.h, c.n};
        return forge::gap_semigroup(spec);
    }
    if (c.family == "backelin") return forge::backelin_projective(c.n, c.r);
    throw forge::Error("usage", "provide --spec, --semigroup, or --family");
}

std::optional<forge::GapSpec> inline_gap_spec(const Common& c) {
    if (c.family == "gap" && !c.a.empty() && !c.d.empty() && c.n >= 2)
        return forge::GapSpec{to_intvec(c.a), to_intvec(c.d), c.h, c.n};
    if (!c.spec_file.empty()) {
        Json j = load_json(c.spec_file);
        if (j.value("family", "") == "gap")
            return forge::GapSpec{forge::vec_from_json(j.at("a")),
                                  forge::vec_from_json(j.at("d")),
                                  j.at("h").get<unsigned long>(),
                                  j.at("n").get<unsigned long>()};
    }
    return std::nullopt;
}

void emit_vectors(const Common& c, const std::vector<forge::IntVec>& vs) {
    if (c.format == "json") {
        std::cout << forge::vectors_to_json(vs).dump(2) << "\n";
    } else if (c.format == "csv") {
        for (const auto& v : vs) {
            for (std::size_t i = 0; i < v.size(); ++i)
                std::cout << (i ? "," : "") << v[i].get_str();
            std::cout << "\n";
        }
    } else {
        for (const auto& v : vs) std::cout << forge::to_string(v) << "\n";
    }
}

void emit_json_or_text(const Common& c, const Json& j) {
    if (c.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump(2) << "\n";  // text falls back to pretty JSON
}

int cmd_semigroup(const Common& c) {
    forge::AffineSemigroup gamma = load_semigroup(c);
    Json j = forge::semigroup_to_json(gamma);
    j["dim"] = gamma.dim();
    j["simplicial"] = gamma.is_simplicial();
    Json ex = Json::array();
    for (std::size_t i : gamma.extremal_rays()) ex.push_back(i);
    j["extremal_rays"] = ex;
    if (c.format == "text") {
        std::cout << "generators:";
        for (const auto& g : gamma.gens()) std::cout << " " << forge::to_string(g);
        std::cout << "\nextremal rays (indices):";
        for (std::size_t i : gamma.extremal_rays()) std::cout << " " << i;
        std::cout << "\ndim " << gamma.dim() << ", simplicial "
                  << (gamma.is_simplicial() ? "yes" : "no") << "\n";
    } else {
        emit_json_or_text(c, j);
    }
    return kExitOk;
}

int cmd_apery(const Common& c) {
    forge::AffineSemigroup gamma = load_semigroup(c);
    forge::AperySet ap = gamma.apery_set(gamma.extremal_rays(), c.apery_cap);
    emit_vectors(c, ap.elements);
    return kExitOk;
}

int cmd_qf(const Common& c) {
    forge::AffineSemigroup gamma = load_semigroup(c);
    forge::QFReport qf = gamma.quasi_frobenius(c.apery_cap);
    if (c.format == "json") {
        Json j;
        j["qf_elements"] = forge::vectors_to_json(qf.qf_elements);
        j["type"] = qf.type_count;
        std::cout << j.dump(2) << "\n";
    } else {
        emit_vectors(c, qf.qf_elements);
        if (c.format == "text") std::cout << "type " << qf.type_count << "\n";
    }
    return kExitOk;
}

int cmd_toric(const Common& c) {
    forge::AffineSemigroup gamma = load_semigroup(c);
    forge::BinomialIdeal ideal = forge::toric_ideal(gamma, "x", c.cap);
    emit_json_or_text(c, forge::ideal_to_json(ideal));
    return kExitOk;
}

forge::BinomialIdeal load_ideal(const Common& c) {
    if (c.ideal_file.empty()) throw forge::Error("usage", "--ideal is required");
    return forge::ideal_from_json(load_json(c.ideal_file));
}

forge::MonomialOrder load_order(const Common& c, const forge::VarContext& ctx) {
    if (c.order_file.empty())
        return forge::MonomialOrder::identity_permutation(forge::OrderKind::DegRevLex,
                                                          ctx.size());
    return forge::order_from_json(load_json(c.order_file), ctx);
}

int cmd_gb(const Common& c) {
    forge::BinomialIdeal ideal = load_ideal(c);
    forge::MonomialOrder order = load_order(c, ideal.context);
    forge::BinomialIdeal out;
    out.context = ideal.context;
    out.gens = forge::buchberger(ideal.gens, order, c.cap);
    emit_json_or_text(c, forge::ideal_to_json(out));
    return kExitOk;
}

int cmd_initial(const Common& c) {
    forge::BinomialIdeal ideal = load_ideal(c);
    forge::MonomialOrder order = load_order(c, ideal.context);
    std::vector<forge::Monomial> gens = forge::initial_ideal(ideal.gens, order, c.cap);
    if (c.format == "json") {
        Json j = Json::array();
        for (const auto& m : gens) j.push_back(m);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& m : gens) std::cout << ideal.context.render(m) << "\n";
    }
    return kExitOk;
}

int cmd_en(const Common& c) {
    auto spec = inline_gap_spec(c);
    if (!spec)
        throw forge::Error("usage", "en needs a gap family (--family gap or --spec)");
    forge::AffineSemigroup gamma = forge::gap_semigroup(*spec);
    forge::VarContext ctx = forge::semigroup_context(gamma);
    forge::GradedFreeComplex en =
        forge::eagon_northcott(forge::gap_matrix(ctx, spec->h));
    forge::assign_degrees(en);
    if (c.format == "text") {
        std::cout << "ranks:";
        for (std::size_t rk : en.ranks) std::cout << " " << rk;
        std::cout << "\nminimal " << (forge::is_minimal(en) ? "yes" : "no") << "\n";
    } else {
        emit_json_or_text(c, forge::complex_to_json(en));
    }
    return kExitOk;
}

int cmd_betti(const Common& c) {
    forge::AffineSemigroup gamma = load_semigroup(c);
    forge::BettiTable table = forge::betti_semigroup(gamma, c.cap);
    if (c.format == "csv") {
        for (const auto& [key, rank] : table.entries) {
            std::cout << key.first << "," << rank;
            for (const auto& e : key.second) std::cout << "," << e.get_str();
            std::cout << "\n";
        }
    } else if (c.format == "text") {
        std::cout << "totals:";
        for (std::size_t t : table.totals()) std::cout << " " << t;
        std::cout << "\n";
    } else {
        emit_json_or_text(c, forge::betti_to_json(table));
    }
    return kExitOk;
}

int cmd_join(const Common& c) {
    if (c.spec_file.empty()) throw forge::Error("usage", "join needs --spec file");
    Json j = load_json(c.spec_file);
    if (j.value("family", "") != "join")
        throw forge::Error("usage", "--spec must have family=join");
    forge::AffineSemigroup gamma = forge::family_from_json(j);
    Common inner = c;
    inner.spec_file.clear();
    inner.semigroup_file.clear();
    Json out = forge::semigroup_to_json(gamma);
    out["simplicial"] = gamma.is_simplicial();
    emit_json_or_text(c, out);
    return kExitOk;
}

int cmd_gastinger(const Common& c) {
    forge::BinomialIdeal ideal = load_ideal(c);
    if (c.semigroup_file.empty() && c.spec_file.empty() && c.family.empty())
        throw forge::Error("usage", "gastinger needs a semigroup input");
    forge::AffineSemigroup gamma = load_semigroup(c);
    forge::GastingerReport rep = forge::gastinger_check(ideal, gamma, c.cap);
    Json j;
    j["contained"] = rep.contained;
    j["finite"] = rep.finite;
    j["quotient_dim"] = rep.quotient_dim;
    j["apery_size"] = rep.apery_size;
    j["equal"] = rep.equal;
    emit_json_or_text(c, j);
    return rep.equal ? kExitOk : kExitRefuted;
}

int cmd_verify(const Common& c, const std::string& claim, bool /*all*/) {
    forge::VerifyOptions opts;
    opts.slow = c.slow;
    opts.cap = c.cap;
    opts.apery_cap = c.apery_cap;
    opts.only = claim;
    std::vector<forge::VerifyClaim> claims = forge::verify_suite(opts);
    if (c.format == "csv") {
        for (const auto& cl : claims)
            for (const auto& inst : cl.instances)
                std::cout << cl.id << "," << inst.status << ",\"" << inst.params << "\"\n";
    } else if (c.format == "text") {
        for (const auto& cl : claims) {
            std::size_t ok = 0;
            for (const auto& inst : cl.instances)
                if (inst.status == "verified") ++ok;
            std::cout << cl.id << ": " << ok << "/" << cl.instances.size()
                      << " verified\n";
            for (const auto& inst : cl.instances)
                if (inst.status != "verified")
                    std::cout << "  " << inst.status << " " << inst.params << " "
                              << inst.details << "\n";
        }
    } else {
        Json out;
        Json arr = Json::array();
        for (const auto& cl : claims) {
            Json jc;
            jc["id"] = cl.id;
            Json insts = Json::array();
            for (const auto& inst : cl.instances) {
                Json ji;
                ji["params"] = Json::parse(inst.params);
                ji["status"] = inst.status;
                if (!inst.details.empty()) ji["details"] = inst.details;
                insts.push_back(ji);
            }
            jc["instances"] = insts;
            arr.push_back(jc);
        }
        out["claims"] = arr;
        std::cout << out.dump(2) << "\n";
    }
    return forge::all_verified(claims) ? kExitOk : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"forge: exact-arithmetic affine semigroup and binomial ideal tool"};
    app.require_subcommand(1);

    Common c;
    std::string verify_claim;
    bool verify_all = false;

    auto* s_semigroup = app.add_subcommand("semigroup", "Semigroup info");
    auto* s_apery = app.add_subcommand("apery", "Apery set w.r.t. the extremal rays");
    auto* s_qf = app.add_subcommand("qf", "Quasi-Frobenius elements and type");
    auto* s_toric = app.add_subcommand("toric", "Toric ideal by elimination");
    auto* s_gb = app.add_subcommand("gb", "Groebner/standard basis of an ideal");
    auto* s_initial = app.add_subcommand("initial", "Minimal generators of the initial ideal");
    auto* s_en = app.add_subcommand("en", "Eagon-Northcott complex of the gap matrix");
    auto* s_betti = app.add_subcommand("betti", "Betti table of the semigroup ring");
    auto* s_join = app.add_subcommand("join", "Join of two semigroups from a spec file");
    auto* s_gastinger = app.add_subcommand("gastinger", "Apery-count dimension check");
    auto* s_verify = app.add_subcommand("verify", "Run the claim verification suite");

    for (CLI::App* cmd : {s_semigroup, s_apery, s_qf, s_toric, s_gb, s_initial, s_en,
                          s_betti, s_join, s_gastinger, s_verify}) {
        add_common(cmd, c);
    }
    for (CLI::App* cmd : {s_semigroup, s_apery, s_qf, s_toric, s_en, s_betti, s_join,
                          s_gastinger}) {
        add_semigroup_inputs(cmd, c);
    }
    for (CLI::App* cmd : {s_gb, s_initial, s_gastinger}) {
        cmd->add_option("--ideal", c.ideal_file, "Ideal JSON file");
        cmd->add_option("--order", c.order_file, "Order JSON file");
    }
    s_verify->add_option("--claim", verify_claim, "Run a single claim id");
    s_verify->add_flag("--all", verify_all, "Run every claim (default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (s_semigroup->parsed()) return cmd_semigroup(c);
        if (s_apery->parsed()) return cmd_apery(c);
        if (s_qf->parsed()) return cmd_qf(c);
        if (s_toric->parsed()) return cmd_toric(c);
        if (s_gb->parsed()) return cmd_gb(c);
        if (s_initial->parsed()) return cmd_initial(c);
        if (s_en->parsed()) return cmd_en(c);
        if (s_betti->parsed()) return cmd_betti(c);
        if (s_join->parsed()) return cmd_join(c);
        if (s_gastinger->parsed()) return cmd_gastinger(c);
        if (s_verify->parsed()) return cmd_verify(c, verify_claim, verify_all);
    } catch (const forge::Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        if (is_cap_error(e)) return kExitResourceCap;
        if (e.code() == "usage" || e.code() == "bad-json") return kExitUsage;
        return kExitRefuted;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRefuted;
    }
    return kExitUsage;
}
