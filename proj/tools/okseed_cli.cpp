// okseed: command-line front end.
//
//   okseed roots      --type A3 [--order 2,1,3] [--w 2,1,3,2]
//   okseed seed       --type A2 --w w0 [--mutate 1,1]
//   okseed enumerate  --type A3 --w 1,2,3,1,2 [--cap N]
//   okseed polytopes  --type A3 --w 1,2,3,1,2 [--project 1,2,4 --off f.off]
//   okseed verify     --type A3 --order 2,1,3 --w 2,1,3,2 [--seeds file.json]
//
// Exit codes: 0 ok, 1 verification failed, 2 usage error, 3 unsupported.

#include "okseed/okseed.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace okseed;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kUnsupported = 3;

struct Options {
    std::string type;
    std::string order;
    std::string w;
    std::size_t cap = 10000;
    std::string out;
    std::string project;
    std::string off;
    std::string mutate;
    std::string seeds;
    bool with_float = false;
};

IntVector parse_list(const std::string& text, const char* what) {
    IntVector out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            int x = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(x);
        } catch (const std::exception&) {
            throw InvalidArgument(std::string("bad entry '") + tok + "' in " + what);
        }
    }
    if (out.empty()) throw InvalidArgument(std::string("empty ") + what);
    return out;
}

AlphabetOrder parse_order(const CartanData& cd, const std::string& text) {
    if (text.empty()) return AlphabetOrder::natural(cd.rank);
    auto letters = parse_list(text, "--order");
    if (static_cast<int>(letters.size()) != cd.rank) throw InvalidArgument("--order must list every letter once");
    return AlphabetOrder(letters);
}

WeylElement parse_w(const CartanData& cd, const std::string& text) {
    if (text == "w0") return longest_element(cd);
    auto eval = weyl_from_word(cd, parse_list(text, "--w"));
    if (!eval.reduced) throw InvalidArgument("--w is not a reduced word");
    return eval.element;
}

SeedContext context_from(const Options& o) {
    auto cd = parse_type(o.type);
    auto order = parse_order(cd, o.order);
    if (o.w.empty()) throw InvalidArgument("--w is required");
    return make_context(cd, order, parse_w(cd, o.w));
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw InvalidArgument("cannot write " + o.out);
    f << text << "\n";
}

std::string root_string(const IntVector& beta) {
    std::string s;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (beta[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (beta[i] != 1) s += std::to_string(beta[i]);
        s += "a" + std::to_string(i + 1);
    }
    return s;
}

int cmd_roots(const Options& o) {
    auto cd = parse_type(o.type);
    auto order = parse_order(cd, o.order);
    auto table = compute_good_lyndon(cd, order);
    Json j;
    j["type"] = cd.name();
    j["order"] = order.letters();
    Json roots = Json::array();
    for (int root : table.sorted_roots()) {
        const auto& beta = cd.positive_roots[root];
        roots.push_back({{"root", root_string(beta)},
                         {"coefficients", beta},
                         {"height", height(beta)},
                         {"word", to_string(table.word_of_root(root), cd.rank)}});
    }
    j["roots"] = roots;
    if (!o.w.empty()) {
        auto ctx = make_context(cd, order, parse_w(cd, o.w));
        j["word"] = ctx.word.letters;
        Json inv = Json::array();
        for (int k = 0; k < ctx.size(); ++k)
            inv.push_back({{"root", root_string(ctx.betas[k])},
                           {"height", ctx.lambda[k]},
                           {"word", to_string(ctx.gl_words[k], cd.rank)}});
        j["inversion_set"] = inv;
    }
    emit(o, j.dump(2));
    return kOk;
}

int cmd_seed(const Options& o) {
    auto ctx = context_from(o);
    Seed s = initial_seed(ctx);
    if (!o.mutate.empty())
        for (int k : parse_list(o.mutate, "--mutate")) s = mutate(s, ctx, k - 1);
    Json j = context_json(ctx);
    j["seed"] = seed_to_json(s, ctx, o.with_float);
    emit(o, j.dump(2));
    return kOk;
}

int cmd_enumerate(const Options& o) {
    auto ctx = context_from(o);
    auto e = enumerate_seeds(ctx, o.cap);
    emit(o, enumeration_to_json(e, ctx, o.with_float).dump(2));
    if (!e.finite) std::cerr << "okseed: cap of " << o.cap << " seeds reached; output is partial\n";
    return kOk;
}

int cmd_polytopes(const Options& o) {
    auto ctx = context_from(o);
    auto e = enumerate_seeds(ctx, o.cap);
    Json j = context_json(ctx);
    j["finite"] = e.finite;
    j["total"] = polytope_to_json(delta_total(ctx), ctx, o.with_float);
    Json seeds = Json::array();
    std::vector<RationalSimplex> simplices;
    for (const auto& s : e.seeds) {
        normal_fan(s, ctx);
        simplices.push_back(delta_seed(s, ctx));
        Json item;
        item["path"] = one_based(s.path);
        item["polytope"] = polytope_to_json(simplices.back(), ctx, o.with_float);
        seeds.push_back(item);
    }
    j["seeds"] = seeds;
    emit(o, j.dump(2));
    if (!o.project.empty()) {
        if (o.off.empty()) throw InvalidArgument("--project needs --off FILE");
        IntVector keep = parse_list(o.project, "--project");
        for (int& k : keep) --k;
        std::ofstream f(o.off);
        if (!f) throw InvalidArgument("cannot write " + o.off);
        f << export_off(simplices, keep);
    }
    return kOk;
}

int cmd_verify(const Options& o) {
    auto ctx = context_from(o);
    Enumeration e;
    if (o.seeds.empty()) {
        e = enumerate_seeds(ctx, o.cap);
    } else {
        std::ifstream f(o.seeds);
        if (!f) throw InvalidArgument("cannot read " + o.seeds);
        Json doc;
        try {
            doc = Json::parse(f);
        } catch (const Json::exception& ex) {
            throw InvalidArgument(std::string("malformed seed file: ") + ex.what());
        }
        e = enumeration_from_json(doc, ctx);
    }
    if (!e.finite) {
        auto partial = partial_hook_sum(ctx, e);
        std::cerr << "okseed: enumeration incomplete after " << partial.seeds
                  << " seeds (partial sum " << to_pq(partial.seed_sum) << "); nothing verified\n";
        return kFailed;
    }
    auto r = verify_all(ctx, e);
    emit(o, report_to_json(r, ctx).dump(2));
    return r.verdict() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seeds, Newton-Okounkov simplices and hook identities for A_q(n(w))"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool need_w) {
        sub->add_option("--type", o.type, "finite type, e.g. A3")->required();
        sub->add_option("--order", o.order, "order on letters, smallest first, e.g. 2,1,3");
        auto* w = sub->add_option("--w", o.w, "reduced word as 1,2,1 or the keyword w0");
        if (need_w) w->required();
        sub->add_option("--out", o.out, "write output here instead of stdout");
        sub->add_flag("--float", o.with_float, "add decimal renderings next to exact values");
    };
    auto* roots = app.add_subcommand("roots", "positive roots and good Lyndon words");
    common(roots, false);
    auto* seed = app.add_subcommand("seed", "initial seed of the order-induced word");
    common(seed, true);
    seed->add_option("--mutate", o.mutate, "mutation directions to apply, 1-based");
    auto* enumerate = app.add_subcommand("enumerate", "all seeds reachable by mutation");
    common(enumerate, true);
    enumerate->add_option("--cap", o.cap, "stop after this many seeds")->check(CLI::PositiveNumber);
    auto* polytopes = app.add_subcommand("polytopes", "simplices of every seed and of Delta(A)");
    common(polytopes, true);
    polytopes->add_option("--cap", o.cap, "stop after this many seeds")->check(CLI::PositiveNumber);
    polytopes->add_option("--project", o.project, "three 1-based coordinates kept in the OFF export");
    polytopes->add_option("--off", o.off, "OFF file for the projected simplices");
    auto* verify = app.add_subcommand("verify", "check the hook identities");
    common(verify, true);
    verify->add_option("--cap", o.cap, "stop after this many seeds")->check(CLI::PositiveNumber);
    verify->add_option("--seeds", o.seeds, "seed list written by 'enumerate' instead of enumerating");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*roots) return cmd_roots(o);
        if (*seed) return cmd_seed(o);
        if (*enumerate) return cmd_enumerate(o);
        if (*polytopes) return cmd_polytopes(o);
        if (*verify) return cmd_verify(o);
    } catch (const UnsupportedConfiguration& e) {
        std::cerr << "okseed: unsupported: " << e.what() << "\n";
        return kUnsupported;
    } catch (const InvalidArgument& e) {
        std::cerr << "okseed: " << e.what() << "\n";
        return kUsage;
    } catch (const InvariantViolation& e) {
        std::cerr << "okseed: check failed: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
