#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "cli.hpp"
#include "ffact/io.hpp"

namespace ffact {

  namespace {
    using nlohmann::json;

    struct Outcome {
      int         code;
      std::string out;
      std::string err;

      json body() const {
        return json::parse(out);
      }
    };

    std::string fixture(char const* name) {
      return std::string(FFACT_FIXTURES) + "/" + name;
    }

    Outcome run(std::vector<std::string> const& args) {
      std::ostringstream out, err;
      int const          code = cli::run(args, out, err);
      return {code, out.str(), err.str()};
    }

    std::string write_temp(std::string const& name, std::string const& text) {
      auto const path = std::filesystem::temp_directory_path() / name;
      std::ofstream(path) << text;
      return path.string();
    }
  }  // namespace

  TEST_SUITE("cli") {
    TEST_CASE("green") {
      auto const r = run({"green", fixture("left_zero.sg")});
      REQUIRE(r.code == 0);
      auto const j = r.body();
      CHECK(j["size"] == 2);
      CHECK(j["identity"].is_null());
      CHECK(j["L"] == json::parse("[[0, 1]]"));
      CHECK(j["R"] == json::parse("[[0], [1]]"));
      CHECK(j["regular_D"] == json::parse("[true]"));
    }

    TEST_CASE("a non-associative table exits with 2 and a witness") {
      auto const r = run({"green", fixture("bad.sg")});
      CHECK(r.code == 2);
      auto const j = json::parse(r.err);
      CHECK(j["error"] == "NotAssociative");
      CHECK(j["witness"] == json::parse("[0, 1, 2]"));
    }

    TEST_CASE("missing files and bad arguments exit with 2") {
      CHECK(run({"green", fixture("missing.sg")}).code == 2);
      CHECK(run({"frobnicate"}).code == 2);
      CHECK(run({}).code == 2);
      auto const r = run({"split", fixture("z5.sg"), fixture("digits.mor"), "2192"});
      CHECK(r.code == 2);
      CHECK(json::parse(r.err)["error"] == "UnknownLetter");
    }

    TEST_CASE("split") {
      auto const r
          = run({"split", fixture("z5.sg"), fixture("digits.mor"), "210232300322002"});
      REQUIRE(r.code == 0);
      auto const j = r.body();
      CHECK(j["height"].get<int>() <= 5);
      CHECK(j["levels"].size() == 14);
    }

    TEST_CASE("detsplit") {
      auto const r
          = run({"detsplit", fixture("left_zero.sg"), fixture("ab.mor"), "abababab"});
      REQUIRE(r.code == 0);
      auto const j = r.body();
      CHECK(j["forward_ramseyan"] == true);
      CHECK(j["height"].get<int>() <= 2);
    }

    TEST_CASE("tree") {
      auto const r
          = run({"tree", fixture("z5.sg"), fixture("digits.mor"), "210232300322002"});
      REQUIRE(r.code == 0);
      auto const j = r.body();
      CHECK(j["ramseyan"] == true);
      CHECK(j["height"].get<int>() <= 15);
      CHECK(tree_from_json(j["tree"].dump()).yield() == "210232300322002");
    }

    TEST_CASE("rexpr") {
      auto const r = run({"rexpr", fixture("z2.sg"), fixture("parity.mor"), "0"});
      REQUIRE(r.code == 0);
      auto const j = r.body();
      CHECK(j["phi_ramseyan"] == true);
      CHECK(j["stats"]["weighted_height"].get<int>() <= 7);
      auto const small = run({"rexpr", fixture("z2.sg"), fixture("parity.mor"), "0",
                              "--max-chars", "10"});
      CHECK(small.body()["expression"].is_null());
      CHECK(run({"rexpr", fixture("z2.sg"), fixture("parity.mor"), "5"}).code == 2);
    }

    TEST_CASE("compact and decode") {
      for (char const* variant : {"det", "complete"}) {
        auto const c = run({"compact", fixture("z5.sg"), fixture("digits.mor"),
                            "210232300322002", "--variant", variant});
        REQUIRE(c.code == 0);
        CHECK(c.body()["variant"] == variant);
        CHECK(c.body()["bits"].size() == 16);
        auto const path = write_temp(std::string("ffact_cli_") + variant + ".json", c.out);
        auto const d    = run({"decode", path, "0", "15"});
        REQUIRE(d.code == 0);
        CHECK(d.body()["value"] == 2);
        CHECK(run({"decode", path, "4", "4"}).code == 2);
      }
      CHECK(run({"compact", fixture("z5.sg"), fixture("digits.mor"), "21",
                 "--variant", "fast"})
                .code
            == 2);
    }

    TEST_CASE("verify a word") {
      auto const r
          = run({"verify", fixture("left_zero.sg"), fixture("ab.mor"), "abababab"});
      REQUIRE(r.code == 0);
      auto const j = r.body();
      CHECK(j["ok"] == true);
      std::vector<std::string> names;
      for (auto const& c : j["checks"]) {
        names.push_back(c["name"]);
      }
      CHECK(names
            == std::vector<std::string>{"split", "detsplit", "streaming", "tree",
                                        "compaction_det", "compaction_complete"});
    }

    TEST_CASE("verify the worked tree") {
      auto const r = run({"verify", fixture("z5.sg"), fixture("digits.mor"), "--tree",
                          fixture("worked_tree.json")});
      REQUIRE(r.code == 0);
      CHECK(r.body()["ok"] == true);
      CHECK(run({"verify", fixture("z5.sg"), fixture("digits.mor")}).code == 2);
    }

    TEST_CASE("verify reports a failing split with a witness") {
      auto const split = write_temp("ffact_cli_split.json",
                                    R"({"height": 1, "levels": [1, 1, 1]})");
      auto const r = run({"verify", fixture("z5.sg"), fixture("digits.mor"), "1111",
                          "--split", split});
      CHECK(r.code == 1);
      auto const j = r.body();
      CHECK(j["ok"] == false);
      auto const& given = j["checks"][3];
      CHECK(given["name"] == "given_split");
      CHECK(given["ok"] == false);
      CHECK(given["witness"]["x"] == 0);
    }

    TEST_CASE("oracle commands") {
      CHECK(run({"oracle", "enumerate", "2"}).body()["count"] == 8);
      CHECK(run({"oracle", "green", fixture("z5.sg")}).body()["agrees"] == true);
      auto const m = run({"oracle", "min-height", fixture("left_zero.sg"),
                          fixture("ab.mor"), "abab", "--cap", "2"});
      CHECK(m.body()["min_height"].get<int>() <= 2);
      auto const l = run({"oracle", "language", fixture("z2.sg"), fixture("parity.mor"),
                          "0", "--maxlen", "4"});
      CHECK(l.code == 0);
      CHECK(l.body()["matches_preimage"] == true);
      CHECK(l.body()["words"].size() == 15);
      auto const c = run({"oracle", "compaction", fixture("z5.sg"), fixture("digits.mor"),
                          "210232300322002", "--variant", "complete"});
      CHECK(c.code == 0);
      auto const s = run({"oracle", "detsep", fixture("left_zero.sg"), "--height", "2",
                          "--max-gaps", "8"});
      CHECK(s.body()["exists"] == false);
    }
  }

}  // namespace ffact
