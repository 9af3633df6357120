#include "cli.hpp"

#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "ffact/ffact.hpp"

namespace ffact::cli {

  namespace {

    using nlohmann::json;

    struct Result {
      int  code;
      json body;
    };

    Semigroup load_semigroup(std::string const& path) {
      return parse_semigroup(read_file(path));
    }

    Morphism load_morphism(std::string const& path, Semigroup const& S) {
      return parse_morphism(read_file(path), S);
    }

    json witness_json(SplitCheck const& c) {
      if (!c.witness) {
        return nullptr;
      }
      auto const& w = *c.witness;
      return {{"level", w.level}, {"x", w.x}, {"y", w.y}, {"x2", w.x2}, {"y2", w.y2}};
    }

    json split_json(Split const& s) {
      return json::parse(split_to_json(s));
    }

    json classes_json(Partition const& p) {
      return p.classes;
    }

    json check(std::string name, bool ok, json details = json::object()) {
      details["name"] = std::move(name);
      details["ok"]   = ok;
      return details;
    }

    Result finish(json checks) {
      bool ok = true;
      for (auto const& c : checks) {
        ok = ok && c.at("ok").get<bool>();
      }
      return {ok ? 0 : 1, json{{"ok", ok}, {"checks", std::move(checks)}}};
    }

    ////////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////////

    Result cmd_green(std::string const& sg) {
      auto const S = load_semigroup(sg);
      auto const G = green(S);
      json       regular = G.regular_D;
      json       group   = G.group_H;
      return {0,
              {{"size", S.size()},
               {"identity", S.identity() ? json(*S.identity()) : json(nullptr)},
               {"idempotents", G.idempotents},
               {"L", classes_json(G.L)},
               {"R", classes_json(G.R)},
               {"H", classes_json(G.H)},
               {"D", classes_json(G.D)},
               {"regular_D", regular},
               {"group_H", group}}};
    }

    Result cmd_split(std::string const& sg,
                     std::string const& mor,
                     std::string const& word,
                     bool               deterministic) {
      auto const S     = load_semigroup(sg);
      auto const phi   = load_morphism(mor, S);
      auto const sigma = labelling_from_word(word, phi, S, Cuts::interior);
      if (!deterministic) {
        auto const s     = ramseyan_split(sigma);
        auto const check = is_ramseyan(s, sigma);
        json       body  = split_json(s);
        if (!check) {
          body["witness"] = witness_json(check);
          return {1, body};
        }
        return {0, body};
      }
      auto const s     = det_ramseyan_split(sigma);
      auto const check = is_forward_ramseyan(s, sigma);
      json       body  = split_json(s);
      body["forward_ramseyan"] = check.holds;
      if (!check) {
        body["witness"] = witness_json(check);
        return {1, body};
      }
      return {0, body};
    }

    Result cmd_tree(std::string const& sg, std::string const& mor, std::string const& word) {
      auto const S   = load_semigroup(sg);
      auto const phi = load_morphism(mor, S);
      auto const t   = factorisation_tree(word, phi, S);
      bool const ok  = is_ramseyan_tree(t, phi, S);
      return {ok ? 0 : 1,
              {{"tree", json::parse(tree_to_json(t))},
               {"height", t.height()},
               {"ramseyan", ok}}};
    }

    Result cmd_rexpr(std::string const& sg,
                     std::string const& mor,
                     Element            x,
                     std::size_t        max_chars) {
      auto const  S     = load_semigroup(sg);
      auto const  phi   = load_morphism(mor, S);
      auto const  e     = build_ramseyan_expr(phi, S, x);
      auto const  stats = expr_stats(e);
      std::size_t size  = printed_size(e);
      json        body{{"element", x},
                       {"printed_size", size},
                       {"expression",
                        size <= max_chars ? json(to_string(e)) : json(nullptr)},
                       {"stats",
                        {{"weighted_height", stats.weighted_height},
                         {"distinct_subexpressions", stats.distinct_subexpressions},
                         {"distinct_non_union_rooted",
                          stats.distinct_non_union_rooted}}},
                       {"phi_ramseyan", is_phi_ramseyan(e, phi, S)}};
      return {0, body};
    }

    Variant parse_variant(std::string const& v) {
      if (v == "det") {
        return Variant::deterministic;
      }
      if (v == "complete") {
        return Variant::complete;
      }
      throw Error(ErrorCode::parse_error, "unknown variant '" + v + "'");
    }

    Result cmd_compact(std::string const& sg,
                       std::string const& mor,
                       std::string const& word,
                       std::string const& variant) {
      auto const S     = load_semigroup(sg);
      auto const phi   = load_morphism(mor, S);
      auto const sigma = labelling_from_word(word, phi, S, Cuts::all);
      return {0, json::parse(compacted_to_json(compact(sigma, parse_variant(variant))))};
    }

    Result cmd_decode(std::string const& file, std::size_t x, std::size_t y) {
      auto const c = compacted_from_json(read_file(file));
      return {0, {{"x", x}, {"y", y}, {"value", decode(c, x, y)}}};
    }

    json compaction_check(AdditiveLabelling const& sigma, Variant v) {
      auto const r = oracle::verify_compaction(sigma, v);
      json       details{{"pairs", r.pairs},
                         {"mismatches", r.mismatches},
                         {"bit_width", r.bit_width},
                         {"width_bound", r.width_bound}};
      if (r.first_mismatch) {
        auto const& m       = *r.first_mismatch;
        details["witness"] = {{"x", m.x},
                              {"y", m.y},
                              {"expected", m.expected},
                              {"decoded", m.decoded}};
      }
      return check(std::string("compaction_") + std::string(to_string(v)),
                   r.ok(),
                   std::move(details));
    }

    Result cmd_verify(std::string const&                sg,
                      std::string const&                mor,
                      std::optional<std::string> const& word,
                      std::optional<std::string> const& tree_file,
                      std::optional<std::string> const& split_file) {
      auto const        S   = load_semigroup(sg);
      auto const        phi = load_morphism(mor, S);
      auto const        G   = green(S);
      std::size_t const n   = S.size();
      json              checks = json::array();

      if (tree_file) {
        auto const t        = tree_from_json(read_file(*tree_file));
        bool const ramseyan = is_ramseyan_tree(t, phi, S);
        checks.push_back(check("tree_ramseyan", ramseyan,
                               {{"yield", t.yield()}, {"height", t.height()}}));
        if (ramseyan && t.yield().size() >= 2) {
          auto const s     = tree_to_split(t, phi, S);
          auto const sigma = labelling_from_word(t.yield(), phi, S, Cuts::interior);
          auto const c     = is_ramseyan(s, sigma);
          checks.push_back(check("tree_split",
                                 c.holds && s.height() <= t.height(),
                                 {{"split", split_json(s)},
                                  {"witness", witness_json(c)}}));
        }
        if (word) {
          checks.push_back(check("tree_yield", t.yield() == *word));
        }
      }

      if (word) {
        auto const& w = *word;
        if (w.size() >= 2) {
          auto const sigma = labelling_from_word(w, phi, S, Cuts::interior);
          auto const s     = ramseyan_split(sigma, G);
          auto const c     = is_ramseyan(s, sigma);
          checks.push_back(check("split",
                                 c.holds && s.height() <= n,
                                 {{"height", s.height()},
                                  {"witness", witness_json(c)}}));

          auto const d  = det_ramseyan_split(sigma, G);
          auto const fc = is_forward_ramseyan(d, sigma);
          checks.push_back(check("detsplit",
                                 fc.holds && d.height() <= n,
                                 {{"height", d.height()},
                                  {"ramseyan", is_ramseyan(d, sigma).holds},
                                  {"witness", witness_json(fc)}}));

          StreamingSplitBuilder builder(S, G);
          for (Element g : sigma.gaps()) {
            builder.extend(g);
          }
          checks.push_back(check("streaming", builder.split() == d));

          if (split_file) {
            auto const j = json::parse(read_file(*split_file));
            Split      given{j.at("levels").get<std::vector<std::size_t>>()};
            auto const gc = is_ramseyan(given, sigma);
            checks.push_back(check("given_split", gc.holds,
                                   {{"height", given.height()},
                                    {"witness", witness_json(gc)}}));
          }
        }
        auto const t = factorisation_tree(w, phi, S);
        checks.push_back(check("tree",
                               t.yield() == w && is_ramseyan_tree(t, phi, S)
                                   && t.height() <= 3 * n,
                               {{"height", t.height()}}));

        auto const all = labelling_from_word(w, phi, S, Cuts::all);
        checks.push_back(compaction_check(all, Variant::deterministic));
        checks.push_back(compaction_check(all, Variant::complete));
      }
      if (!word && !tree_file) {
        throw Error(ErrorCode::parse_error, "verify needs a word or --tree");
      }
      return finish(std::move(checks));
    }

    ////////////////////////////////////////////////////////////////////////
    // Oracle commands
    ////////////////////////////////////////////////////////////////////////

    Result cmd_oracle_green(std::string const& sg) {
      auto const S     = load_semigroup(sg);
      bool const agree = green(S) == oracle::green_bruteforce(S);
      return {agree ? 0 : 1, {{"agrees", agree}}};
    }

    Result cmd_oracle_enumerate(std::size_t n, bool tables) {
      auto const all  = oracle::enumerate_semigroups(n);
      json       body = {{"n", n}, {"count", all.size()}};
      if (tables) {
        json t = json::array();
        for (auto const& S : all) {
          t.push_back(S.rows());
        }
        body["tables"] = std::move(t);
      }
      return {0, body};
    }

    Result cmd_oracle_min_height(std::string const& sg,
                                 std::string const& mor,
                                 std::string const& word,
                                 std::size_t        cap) {
      auto const S     = load_semigroup(sg);
      auto const phi   = load_morphism(mor, S);
      auto const sigma = labelling_from_word(word, phi, S, Cuts::interior);
      auto const h     = oracle::min_ramseyan_height(sigma, cap);
      return {0, {{"cap", cap}, {"min_height", h ? json(*h) : json(nullptr)}}};
    }

    Result cmd_oracle_language(std::string const&                sg,
                               std::string const&                mor,
                               std::optional<Element> const&     x,
                               std::optional<std::string> const& expr,
                               std::size_t                       maxlen) {
      auto const S   = load_semigroup(sg);
      auto const phi = load_morphism(mor, S);
      if (x.has_value() == expr.has_value()) {
        throw Error(ErrorCode::parse_error, "give exactly one of <element> and --expr");
      }
      RExpr const e     = x ? build_ramseyan_expr(phi, S, *x) : parse_expr(*expr);
      auto const  words = oracle::language_upto(e, phi.alphabet(), maxlen);
      json        body{{"maxlen", maxlen}, {"words", words}};
      if (!x) {
        return {0, body};
      }
      std::vector<std::string> preimage;
      for (auto const& w : oracle::words_upto(phi.alphabet(), maxlen)) {
        if (eval_word(phi, S, w) == *x) {
          preimage.push_back(w);
        }
      }
      bool const agree = preimage == words;
      body["element"]           = *x;
      body["matches_preimage"]  = agree;
      return {agree ? 0 : 1, body};
    }

    Result cmd_oracle_compaction(std::string const& sg,
                                 std::string const& mor,
                                 std::string const& word,
                                 std::string const& variant) {
      auto const S     = load_semigroup(sg);
      auto const phi   = load_morphism(mor, S);
      auto const sigma = labelling_from_word(word, phi, S, Cuts::all);
      return finish(json::array({compaction_check(sigma, parse_variant(variant))}));
    }

    Result cmd_oracle_detsep(std::string const& sg, std::size_t height, std::size_t gaps) {
      auto const S = load_semigroup(sg);
      return {0,
              {{"height", height},
               {"max_gaps", gaps},
               {"exists", oracle::deterministic_ramseyan_exists(S, height, gaps)}}};
    }

    void report_error(Error const& e, std::ostream& err) {
      json j{{"error", to_string(e.code())}, {"message", e.what()}};
      if (auto const* na = dynamic_cast<NotAssociative const*>(&e)) {
        j["witness"] = na->witness();
      }
      err << j.dump() << '\n';
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Factorisation forests for finite semigroups", "ffact"};
    app.require_subcommand(1);

    std::string sg, mor, word, variant = "det", file;
    std::optional<std::string> opt_word, tree_file, split_file, opt_expr;
    std::optional<Element>     opt_element;
    Element                    element   = 0;
    std::size_t                x = 0, y = 0, n = 0, cap = 4, maxlen = 6;
    std::size_t                height = 2, max_gaps = 8;
    std::size_t                max_chars = 4096;
    bool                       tables    = false;

    auto* green_cmd = app.add_subcommand("green", "Green's relations of a semigroup");
    green_cmd->add_option("semigroup", sg, "Semigroup file")->required();

    auto add_word_args = [&](CLI::App* c) {
      c->add_option("semigroup", sg, "Semigroup file")->required();
      c->add_option("morphism", mor, "Morphism file")->required();
      c->add_option("word", word, "Input word")->required();
    };
    auto* split_cmd = app.add_subcommand("split", "Ramseyan split of the interior cuts");
    add_word_args(split_cmd);
    auto* det_cmd
        = app.add_subcommand("detsplit", "Deterministic forward ramseyan split");
    add_word_args(det_cmd);
    auto* tree_cmd = app.add_subcommand("tree", "Ramseyan factorisation tree");
    add_word_args(tree_cmd);

    auto* rexpr_cmd = app.add_subcommand("rexpr", "Ramseyan expression for an element");
    rexpr_cmd->add_option("semigroup", sg, "Semigroup file")->required();
    rexpr_cmd->add_option("morphism", mor, "Morphism file")->required();
    rexpr_cmd->add_option("element", element, "Target element")->required();
    rexpr_cmd->add_option("--max-chars", max_chars,
                          "Omit the expression text beyond this size");

    auto* compact_cmd = app.add_subcommand("compact", "Compact the cut labelling");
    add_word_args(compact_cmd);
    compact_cmd->add_option("--variant", variant, "det or complete")
        ->check(CLI::IsMember({"det", "complete"}));

    auto* decode_cmd = app.add_subcommand("decode", "Decode σ(x, y)");
    decode_cmd->add_option("compacted", file, "Output of compact")->required();
    decode_cmd->add_option("x", x, "First position")->required();
    decode_cmd->add_option("y", y, "Second position")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run every applicable check");
    verify_cmd->add_option("semigroup", sg, "Semigroup file")->required();
    verify_cmd->add_option("morphism", mor, "Morphism file")->required();
    verify_cmd->add_option("word", opt_word, "Input word");
    verify_cmd->add_option("--tree", tree_file, "Tree JSON to check");
    verify_cmd->add_option("--split", split_file, "Split JSON of the interior cuts");

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference checks");
    oracle_cmd->require_subcommand(1);
    auto* o_green = oracle_cmd->add_subcommand("green", "Compare with brute force");
    o_green->add_option("semigroup", sg, "Semigroup file")->required();
    auto* o_enum = oracle_cmd->add_subcommand("enumerate", "Count semigroups");
    o_enum->add_option("n", n, "Size, at most 3")->required();
    o_enum->add_flag("--tables", tables, "Print the tables");
    auto* o_min = oracle_cmd->add_subcommand("min-height", "Least ramseyan height");
    add_word_args(o_min);
    o_min->add_option("--cap", cap, "Largest height tried");
    auto* o_lang = oracle_cmd->add_subcommand("language", "Enumerate a language");
    o_lang->add_option("semigroup", sg, "Semigroup file")->required();
    o_lang->add_option("morphism", mor, "Morphism file")->required();
    o_lang->add_option("element", opt_element, "Use the expression for this element");
    o_lang->add_option("--expr", opt_expr, "Use this expression instead");
    o_lang->add_option("--maxlen", maxlen, "Longest word");
    auto* o_comp = oracle_cmd->add_subcommand("compaction", "Decode every pair");
    add_word_args(o_comp);
    o_comp->add_option("--variant", variant, "det or complete")
        ->check(CLI::IsMember({"det", "complete"}));
    auto* o_sep = oracle_cmd->add_subcommand(
        "detsep", "Search for a prefix-determined ramseyan split");
    o_sep->add_option("semigroup", sg, "Semigroup file")->required();
    o_sep->add_option("--height", height, "Height");
    o_sep->add_option("--max-gaps", max_gaps, "Longest labelling");

    std::vector<std::string> argv_storage{"ffact"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char const*> argv;
    for (auto const& a : argv_storage) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;
    }

    try {
      Result r{0, nullptr};
      if (*green_cmd) {
        r = cmd_green(sg);
      } else if (*split_cmd) {
        r = cmd_split(sg, mor, word, false);
      } else if (*det_cmd) {
        r = cmd_split(sg, mor, word, true);
      } else if (*tree_cmd) {
        r = cmd_tree(sg, mor, word);
      } else if (*rexpr_cmd) {
        r = cmd_rexpr(sg, mor, element, max_chars);
      } else if (*compact_cmd) {
        r = cmd_compact(sg, mor, word, variant);
      } else if (*decode_cmd) {
        r = cmd_decode(file, x, y);
      } else if (*verify_cmd) {
        r = cmd_verify(sg, mor, opt_word, tree_file, split_file);
      } else if (*o_green) {
        r = cmd_oracle_green(sg);
      } else if (*o_enum) {
        r = cmd_oracle_enumerate(n, tables);
      } else if (*o_min) {
        r = cmd_oracle_min_height(sg, mor, word, cap);
      } else if (*o_lang) {
        r = cmd_oracle_language(sg, mor, opt_element, opt_expr, maxlen);
      } else if (*o_comp) {
        r = cmd_oracle_compaction(sg, mor, word, variant);
      } else if (*o_sep) {
        r = cmd_oracle_detsep(sg, height, max_gaps);
      }
      out << r.body.dump(2) << '\n';
      return r.code;
    } catch (Error const& e) {
      report_error(e, err);
      return 2;
    } catch (nlohmann::json::exception const& e) {
      err << json{{"error", "ParseError"}, {"message", e.what()}}.dump() << '\n';
      return 2;
    }
  }

}  // namespace ffact::cli
