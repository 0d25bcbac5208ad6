#include "qgrkz/cli/app.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace qgrkz;
using nlohmann::json;

namespace {

std::string config(const std::string& name) { return std::string(QGRKZ_CONFIG_DIR) + "/" + name + ".json"; }

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "qgrkz");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_config(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("qgrkz_test_" + name + ".json");
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST(Cli, FixedPoints) {
    auto r = run({"fixed-points", "-c", config("a1_ww0")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0]["delta"], json::parse("[[1],[-1]]"));
    EXPECT_EQ(j[0]["sigma"], json::parse("[[0],[1],[0]]"));
}

TEST(Cli, QuantumMatrixOfTStarP1) {
    auto r = run({"quantum", "--i", "1", "--order", "3", "-c", config("a1_ww0")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["ring"], "series");
    EXPECT_EQ(j["order"], 3);
    EXPECT_EQ(j["variables"], json::parse(R"(["a1","h"])"));
    std::map<std::pair<int, int>, std::string> text;
    for (auto& e : j["entries"]) text[{e["row"].get<int>(), e["col"].get<int>()}] = e["text"].get<std::string>();
    EXPECT_EQ(text.at({0, 0}), "(1/4*h + 1/2*a1) + (h)*u1 + (h)*u1^2 + (h)*u1^3");
    EXPECT_EQ(text.at({1, 0}), "(-h) + (-h)*u1 + (-h)*u1^2 + (-h)*u1^3");
    auto first = j["entries"][0]["value"];
    EXPECT_EQ(first["order"], 3);
    EXPECT_EQ(first["terms"][0]["u"], json::parse("[0]"));
}

TEST(Cli, ClosedPathMatchesSum) {
    auto a = run({"quantum", "--i", "2", "--order", "4", "--path", "closed", "-c", config("a2_w1w2_0")});
    auto b = run({"quantum", "--i", "2", "--order", "4", "-c", config("a2_w1w2_0")});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, VerifySuitePasses) {
    auto r = run({"verify", "suite", "-c", config("a2_w1w2_0"), "--order", "6"});
    EXPECT_EQ(r.code, 0) << r.out;
    auto j = json::parse(r.out);
    EXPECT_EQ(j.size(), 15u);
    for (auto& rep : j) EXPECT_EQ(rep["verdict"], "pass") << rep.dump();
}

TEST(Cli, VerifySubsets) {
    EXPECT_EQ(run({"verify", "lemma", "-c", config("c2_w2w2_0")}).code, 0);
    EXPECT_EQ(run({"verify", "flat", "-c", config("a1_ww0"), "--order", "5"}).code, 0);
    auto eq = run({"verify", "kz-eq", "-c", config("a1_w4_0"), "--order", "4"});
    EXPECT_EQ(eq.code, 0);
    EXPECT_EQ(json::parse(eq.out)[0]["verdict"], "pass");
}

TEST(Cli, ScopeErrors) {
    auto kz = run({"kz", "--i", "1", "-c", config("c2_w2w2_0")});
    EXPECT_EQ(kz.code, 2);
    EXPECT_NE(kz.err.find("scope error"), std::string::npos);
    EXPECT_TRUE(kz.out.empty());
    auto closed = run({"quantum", "--path", "closed", "-c", config("b2_w1w1_0")});
    EXPECT_EQ(closed.code, 2);
    EXPECT_NE(closed.err.find("KZ closed form requires simply-laced"), std::string::npos);
    auto eq = run({"verify", "kz-eq", "-c", config("c2_w2w2_0")});
    EXPECT_EQ(eq.code, 2);
    EXPECT_EQ(json::parse(eq.out)[0]["verdict"], "not covered by the theorem");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"info"}).code, 2);
    EXPECT_EQ(run({"info", "-c", "/nonexistent/x.json"}).code, 2);
    EXPECT_EQ(run({"quantum", "--i", "7", "-c", config("a1_ww0")}).code, 2);
    EXPECT_EQ(run({"quantum", "--path", "other", "-c", config("a1_ww0")}).code, 2);
    EXPECT_EQ(run({"info", "--chamber", "1,-1", "-c", config("a2_w1w2_0")}).code, 2);
    EXPECT_EQ(run({"sign", "0", "9", "0", "-c", config("a1_ww0")}).code, 2);
    EXPECT_EQ(run({"sign", "0", "1", "1,1", "-c", config("a1_ww0")}).code, 2);
    auto bad = run({"info", "-c", temp_config("malformed", "{\"datum\": ")});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("malformed JSON"), std::string::npos);
}

TEST(Cli, Sign) {
    auto r = run({"sign", "0", "1", "0", "-c", config("a1_ww0")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["sigma"], 1);
    EXPECT_EQ(j["adjacent"].size(), 2u);
}

TEST(Cli, ChamberOverride) {
    auto a = run({"betti", "-c", config("a2_w1w1w1_0")});
    auto b = run({"betti", "--chamber", "-3/2,5", "-c", config("a2_w1w1w1_0")});
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(b.code, 0);
    EXPECT_EQ(a.out, b.out);
    auto info = json::parse(run({"info", "--chamber", "-3/2,5", "-c", config("a2_w1w1w1_0")}).out);
    EXPECT_EQ(info["chamber"], json::parse(R"(["-3/2","5/1"])"));
}

TEST(Cli, OtherRecords) {
    auto t = json::parse(run({"tangent", "-c", config("a1_ww0")}).out);
    EXPECT_EQ(t[0]["dimension"], 2);
    auto c = json::parse(run({"curves", "-c", config("a1_ww0")}).out);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[1]["kind"], "affine-line");
    EXPECT_TRUE(c[1]["class"].is_null());
    EXPECT_EQ(c[0]["class"], json::parse(R"(["1/1","-1/1"])"));
    EXPECT_EQ(c[0]["kind"], "projective-line");
    auto b = json::parse(run({"betti", "-c", config("a1_ww0")}).out);
    EXPECT_EQ(b, json::parse(R"([{"degree":2,"rank":1},{"degree":4,"rank":1}])"));
    auto w = json::parse(run({"walls", "-c", config("a1_ww0")}).out);
    // levels -1 and 1 come from the cotangent fibres
    ASSERT_EQ(w.size(), 3u);
    EXPECT_EQ(w[1]["n"], 0);
    ASSERT_EQ(w[1]["components"].size(), 1u);
    EXPECT_EQ(w[1]["components"][0]["m"], 1);
    EXPECT_EQ(w[0]["components"][1]["has_affine_line"], true);
    auto i = json::parse(run({"info", "-c", config("d4_w1w1_0")}).out);
    EXPECT_EQ(i["fixed_points"], 8);
    EXPECT_EQ(i["weight_multiplicity"], 8);
    EXPECT_EQ(i["simply_laced"], true);
    auto cl = json::parse(run({"classical", "--i", "1", "-c", config("a1_ww0")}).out);
    EXPECT_EQ(cl["ring"], "polynomial");
    auto kz = run({"kz", "--i", "1", "--order", "3", "-c", config("a1_ww0")});
    auto hat = run({"quantum", "--i", "1", "--order", "3", "--hatted", "-c", config("a1_ww0")});
    EXPECT_EQ(kz.out, hat.out);
}

TEST(Cli, ByteStableOutput) {
    for (auto cmd : {"walls", "curves", "tangent"}) {
        auto a = run({cmd, "-c", config("a2_w1w1w2_w1")});
        auto b = run({cmd, "-c", config("a2_w1w1w2_w1")});
        EXPECT_EQ(a.out, b.out) << cmd;
    }
    auto a = run({"verify", "suite", "-c", config("a1_w4_2w"), "--order", "4"});
    auto b = run({"verify", "suite", "-c", config("a1_w4_2w"), "--order", "4", "--serial"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
}

TEST(Config, Diagnostics) {
    auto err = [](const std::string& text) -> std::string {
        try {
            cli::parse_config(json::parse(text));
        } catch (const cli::ConfigError& e) {
            return e.what();
        }
        return "";
    };
    EXPECT_NE(err(R"({"lambdas":[1],"mu":[0]})").find("datum"), std::string::npos);
    EXPECT_NE(err(R"({"datum":{"type":"G","rank":2},"lambdas":[1],"mu":[0,0]})").find("no minuscule"), std::string::npos);
    EXPECT_NE(err(R"({"datum":{"type":"C","rank":2},"lambdas":[1],"mu":[0,0]})").find("not minuscule"), std::string::npos);
    EXPECT_NE(err(R"({"datum":{"type":"A","rank":2},"lambdas":[3],"mu":[0,0]})").find("out of range"), std::string::npos);
    EXPECT_NE(err(R"({"datum":{"type":"A","rank":2},"lambdas":[1],"mu":[0]})").find("rank is 2"), std::string::npos);
    EXPECT_FALSE(err(R"({"datum":{"type":"A","rank":1},"lambdas":[1,1],"mu":[4],"order":1})").empty());
    EXPECT_FALSE(err(R"({"datum":{"type":"A","rank":1},"lambdas":[1,1],"mu":[0],"order":-1})").empty());
    EXPECT_NE(err(R"({"datum":{"type":"A","rank":2},"lambdas":[1,2],"mu":[0,0],"chamber":[1,-1]})").find("generic"), std::string::npos);
    EXPECT_TRUE(err(R"({"datum":{"type":"A","rank":2},"lambdas":[1,2],"mu":[0,0],"chamber":"1,1/3"})").empty());
}

TEST(Config, FilesMatchCatalog) {
    std::size_t files = 0;
    for (auto& f : std::filesystem::directory_iterator(QGRKZ_CONFIG_DIR))
        if (f.path().extension() == ".json") ++files;
    EXPECT_EQ(files, cli::catalog_sources().size());
    for (auto& c : cli::catalog()) {
        auto f = cli::load_config(config(c.name));
        EXPECT_EQ(f.name, c.name);
        EXPECT_EQ(f.problem.str(), c.problem.str());
        EXPECT_EQ(f.order, c.order);
        EXPECT_EQ(f.chamber.has_value(), c.chamber.has_value());
    }
    EXPECT_THROW(cli::catalog_entry("nope"), cli::ConfigError);
}

TEST(Config, DefaultOrderAndName) {
    auto c = cli::parse_config(json::parse(R"({"datum":{"type":"A","rank":1},"lambdas":[1,1],"mu":[0]})"), "x");
    EXPECT_EQ(c.order, 6);
    EXPECT_EQ(c.name, "x");
    EXPECT_FALSE(c.chamber.has_value());
}
