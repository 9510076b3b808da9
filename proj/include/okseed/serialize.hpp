#pragma once

// JSON forms of seeds, simplices and verification reports. Rationals are
// always written as "p/q" strings; indices shown to users are 1-based.

#include "okseed/cluster.hpp"
#include "okseed/hookalg.hpp"
#include "okseed/okbody.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace okseed {

using Json = nlohmann::ordered_json;

inline Json rat_vector_json(const RatVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_pq(x));
    return out;
}

inline Json one_based(const IntVector& v) {
    Json out = Json::array();
    for (int x : v) out.push_back(x + 1);
    return out;
}

inline Json seed_to_json(const Seed& seed, const SeedContext& ctx, bool with_float = false) {
    Json j;
    j["word"] = ctx.word.letters;
    j["B"] = seed.B;
    j["psi"] = seed.psi;
    Json mu = Json::array();
    for (int k : ctx.exchangeable) mu.push_back(seed.muhat[k]);
    j["muhat"] = mu;
    Json nv = Json::array();
    for (const auto& v : seed.nvec) nv.push_back(rat_vector_json(v));
    j["nvec"] = nv;
    j["frozen"] = one_based(ctx.frozen_indices);
    j["depth"] = seed.depth;
    j["path"] = one_based(seed.path);
    Json words = Json::array();
    for (const auto& p : seed.psi) words.push_back(to_string(ctx.dominant_word(p), ctx.cartan.rank));
    j["words"] = words;
    if (with_float) {
        Json fl = Json::array();
        for (const auto& v : seed.nvec) {
            Json row = Json::array();
            for (const auto& x : v) row.push_back(to_double(x));
            fl.push_back(row);
        }
        j["nvec_float"] = fl;
    }
    return j;
}

inline Json context_json(const SeedContext& ctx) {
    Json j;
    j["type"] = ctx.cartan.name();
    j["order"] = ctx.order.letters();
    j["word"] = ctx.word.letters;
    return j;
}

inline Json enumeration_to_json(const Enumeration& e, const SeedContext& ctx, bool with_float = false) {
    Json j = context_json(ctx);
    j["finite"] = e.finite;
    j["count"] = e.seeds.size();
    Json seeds = Json::array();
    for (const auto& s : e.seeds) seeds.push_back(seed_to_json(s, ctx, with_float));
    j["seeds"] = seeds;
    return j;
}

inline Json polytope_to_json(const RationalSimplex& s, const SeedContext& ctx, bool with_float = false) {
    Json j;
    j["lambda"] = ctx.lambda;
    Json verts = Json::array(), nr = Json::array(), sr = Json::array();
    for (const auto& v : s.vertices) verts.push_back(rat_vector_json(v));
    for (const auto& v : s.normals_N) nr.push_back(rat_vector_json(v));
    for (const auto& v : s.normals_n) sr.push_back(rat_vector_json(v));
    j["vertices"] = verts;
    j["N_rays"] = nr;
    j["n_rays"] = sr;
    j["volume"] = to_pq(s.volume);
    if (with_float) j["volume_float"] = to_double(s.volume);
    return j;
}

struct VerifyOutcome {
    bool prophook = false;
    CorhookReport corhook;
    PetersonProctorReport peterson_proctor;
    std::size_t seeds = 0;

    bool verdict() const { return prophook && corhook.verdict; }
};

inline VerifyOutcome verify_all(const SeedContext& ctx, const Enumeration& e) {
    VerifyOutcome out;
    out.prophook = verify_prophook(ctx, e).verdict;
    out.corhook = verify_corhook(ctx, e);
    out.peterson_proctor = peterson_proctor_report(ctx);
    out.seeds = e.seeds.size();
    return out;
}

inline Json report_to_json(const VerifyOutcome& r, const SeedContext& ctx) {
    Json j;
    j["w"] = ctx.word.letters;
    j["order"] = ctx.order.letters();
    Json forms = Json::array();
    for (const auto& beta : ctx.betas) forms.push_back(to_string(make_linear_form(beta)));
    j["lhs_forms"] = forms;
    j["seeds"] = r.seeds;
    j["verdict"] = r.verdict();
    j["prophook"] = r.prophook;
    j["corhook"] = {{"lhs", to_pq(r.corhook.seed_sum)}, {"rhs", to_pq(r.corhook.hook)}};
    j["peterson_proctor"] = {{"hook", to_pq(r.peterson_proctor.hook)},
                             {"reduced_words", r.peterson_proctor.reduced_words.str()},
                             {"match", r.peterson_proctor.match}};
    return j;
}

// Reads the psi columns of a seed list written by enumeration_to_json. Only
// psi is needed to re-check the hook identities; the finiteness flag is kept.
inline Enumeration enumeration_from_json(const Json& j, const SeedContext& ctx) {
    if (!j.contains("seeds") || !j["seeds"].is_array()) throw InvalidArgument("seed file has no 'seeds' array");
    if (j.contains("word") && j["word"].get<IntVector>() != ctx.word.letters)
        throw InvalidArgument("seed file was produced for a different reduced word");
    Enumeration e;
    e.finite = j.value("finite", false);
    int n = ctx.size();
    for (const auto& s : j["seeds"]) {
        Seed seed;
        seed.psi = s.at("psi").get<std::vector<IntVector>>();
        if (static_cast<int>(seed.psi.size()) != n) throw InvalidArgument("seed has the wrong number of variables");
        for (const auto& p : seed.psi) {
            if (static_cast<int>(p.size()) != n) throw InvalidArgument("psi vector has the wrong length");
            for (int x : p)
                if (x < 0) throw InvalidArgument("psi vector has a negative entry");
            if (ctx.degree(p) <= 0) throw InvalidArgument("psi vector is zero");
        }
        e.seeds.push_back(std::move(seed));
    }
    return e;
}

}  // namespace okseed
