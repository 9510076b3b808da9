#include <catch_amalgamated.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(OKSEED_BINARY) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json run_json(const std::string& args) {
    auto r = run(args);
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("roots") {
    auto j = run_json("roots --type A2 --order 1,2");
    REQUIRE(j["roots"].size() == 3);
    CHECK(j["roots"][0]["word"] == "1");
    CHECK(j["roots"][1]["word"] == "12");
    CHECK(j["roots"][2]["word"] == "2");

    auto k = run_json("roots --type A3 --order 2,1,3 --w 2,1,3,2");
    std::vector<std::string> got;
    for (const auto& r : k["inversion_set"]) got.push_back(r["root"]);
    CHECK(got == std::vector<std::string>{"a2", "a1+a2", "a2+a3", "a1+a2+a3"});

    CHECK(run("roots --type E9").code == 2);
    CHECK(run("roots").code == 2);
    CHECK(run("frobnicate --type A2").code == 2);
}

TEST_CASE("seed") {
    auto j = run_json("seed --type A3 --w 1,2,3,1,2");
    CHECK(j["seed"]["words"] == nlohmann::json({"1", "12", "123", "21", "2312"}));
    auto a2 = run_json("seed --type A2 --w w0");
    CHECK(a2["seed"]["psi"] == nlohmann::json({{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}));
    auto m = run_json("seed --type A2 --w w0 --mutate 1");
    CHECK(m["seed"]["psi"][0] == nlohmann::json({0, 0, 1}));
    CHECK(m["seed"]["depth"] == 1);
    CHECK(run("seed --type A2 --w w0 --mutate 2").code == 2);
    CHECK(run("seed --type A2 --w 1,1").code == 2);
    CHECK(run("seed --type A2 --w 2,1").code == 3);
}

TEST_CASE("enumerate") {
    CHECK(run_json("enumerate --type A3 --w 1,2,3,1,2")["count"] == 5);
    auto a2 = run_json("enumerate --type A2 --w w0");
    CHECK(a2["count"] == 2);
    CHECK(a2["finite"] == true);
    auto part = run_json("enumerate --type A4 --w w0 --cap 3");
    CHECK(part["count"] == 3);
    CHECK(part["finite"] == false);
    CHECK(run("enumerate --type G2 --order 2,1 --w w0").code == 3);
}

TEST_CASE("enumerate output is byte-identical across runs") {
    auto a = run("enumerate --type B2 --w w0");
    auto b = run("enumerate --type B2 --w w0");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("polytopes") {
    auto j = run_json("polytopes --type A2 --w w0");
    CHECK(j["seeds"].size() == 2);
    CHECK(j["total"]["volume"] == "1/2");
    CHECK(j["seeds"][0]["polytope"]["volume"] == "1/4");

    auto r = run("polytopes --type A3 --w 1,2,3,1,2 --project 1,2,4 --off cli_a3.off");
    CHECK(r.code == 0);
    std::ifstream off("cli_a3.off");
    std::string head;
    std::getline(off, head);
    CHECK(head == "OFF");
    CHECK(run("polytopes --type A2 --w w0 --project 1,2").code == 2);
}

TEST_CASE("verify") {
    auto j = run_json("verify --type A3 --order 2,1,3 --w 2,1,3,2");
    CHECK(j["verdict"] == true);
    CHECK(j["corhook"]["lhs"] == "2/1");
    CHECK(j["peterson_proctor"]["match"] == true);
    CHECK(run_json("verify --type A2 --w w0")["verdict"] == true);
    CHECK(run("verify --type A4 --w w0 --cap 5").code == 1);

    auto seeds = run("enumerate --type A3 --order 2,1,3 --w 2,1,3,2 --out cli_seeds.json");
    REQUIRE(seeds.code == 0);
    CHECK(run("verify --type A3 --order 2,1,3 --w 2,1,3,2 --seeds cli_seeds.json").code == 0);

    std::ifstream in("cli_seeds.json");
    auto doc = nlohmann::json::parse(in);
    doc["seeds"][1]["psi"][0] = {0, 1, 1, 0};
    std::ofstream("cli_bad.json") << doc.dump();
    auto bad = run("verify --type A3 --order 2,1,3 --w 2,1,3,2 --seeds cli_bad.json");
    CHECK(bad.code == 1);
    CHECK(nlohmann::json::parse(bad.out)["verdict"] == false);
    CHECK(run("verify --type A3 --order 2,1,3 --w 2,1,3,2 --seeds missing.json").code == 2);
}
