// invmon: command line front end.
//
// Exit codes: 0/1/2 for confirmed/refuted/unknown answers (0 otherwise on
// success), 64 usage, 65 unreadable or malformed input, 66 refusal (for
// example a presentation not flagged e_unitary), 70 internal errors.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "invmon/error.hpp"
#include "invmon/finverse.hpp"
#include "invmon/geometry.hpp"
#include "invmon/group_oracle.hpp"
#include "invmon/json_io.hpp"
#include "invmon/presentation.hpp"
#include "invmon/propa.hpp"
#include "invmon/stephen.hpp"
#include "invmon/xgraph.hpp"

using namespace invmon;

namespace {

  constexpr int EXIT_USAGE    = 64;
  constexpr int EXIT_DATAERR  = 65;
  constexpr int EXIT_REFUSAL  = 66;
  constexpr int EXIT_INTERNAL = 70;

  class UsageError : public Error {
   public:
    using Error::Error;
  };

  // Writes to `path`, or to stdout for "-".
  void emit(std::string const& path, std::string const& text) {
    if (path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) {
      throw IoError("cannot write " + path);
    }
    out << text;
  }

  ////////////////////////////////////////////////////////////////////////
  // Oracle specs
  ////////////////////////////////////////////////////////////////////////

  unsigned parse_count(std::string const& s, std::string const& spec) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &pos);
    } catch (std::exception const&) {
      pos = 0;
    }
    if (pos == 0 || pos != s.size()) {
      throw UsageError("bad oracle spec \"" + spec + "\"");
    }
    return static_cast<unsigned>(v);
  }

  OraclePtr make_oracle(std::string const& spec, Presentation const& p, std::size_t steps) {
    if (spec.rfind("fg:", 0) == 0) {
      return std::make_shared<FreeGroupOracle>(parse_count(spec.substr(3), spec));
    }
    if (spec.rfind("bs:", 0) == 0) {
      unsigned n = parse_count(spec.substr(3), spec);
      if (n == 0) {
        throw UsageError("bs:<n> needs n >= 1");
      }
      return std::make_shared<BaumslagSolitarOracle>(n);
    }
    if (spec == "scary") {
      return scary_oracle();
    }
    if (spec.rfind("rw:", 0) == 0) {
      return std::make_shared<RewritingOracle>(
          p.number_of_generators(), read_rules(spec.substr(3), p.alphabet()), steps);
    }
    if (spec.rfind("fp:", 0) == 0) {
      // the first factor cannot itself be a free product
      auto comma = spec.find(',');
      if (comma == std::string::npos) {
        throw UsageError("fp:<spec>,<spec> needs two factors");
      }
      std::string first = spec.substr(3, comma - 3), second = spec.substr(comma + 1);
      if (first.rfind("rw:", 0) == 0 || second.rfind("rw:", 0) == 0) {
        throw UsageError("rw: factors are not supported inside fp:");
      }
      return std::make_shared<FreeProductOracle>(make_oracle(first, p, steps),
                                                 make_oracle(second, p, steps));
    }
    throw UsageError("unknown oracle spec \"" + spec + "\"");
  }

  bool same_relations(Presentation const& p, Presentation const& q) {
    return p.alphabet() == q.alphabet() && p.relations() == q.relations();
  }

  // "auto": recognise the built-in fixtures and presentations whose group
  // image is free.
  std::string auto_oracle(Presentation const& p) {
    if (same_relations(p, fixture_scary())) {
      return "scary";
    }
    if (p.number_of_generators() == 2) {
      for (unsigned n = 1; n <= 64; ++n) {
        if (same_relations(p, fixture_bs(n))) {
          return "bs:" + std::to_string(n);
        }
      }
    }
    bool free_image = true;
    for (auto const& r : group_image(p).relators) {
      free_image = free_image && free_reduce(r).empty();
    }
    if (free_image) {
      return "fg:" + std::to_string(p.number_of_generators());
    }
    throw UsageError("cannot infer a group oracle for this presentation; pass --oracle");
  }

  OraclePtr resolve_oracle(std::string const& spec, Presentation const& p, std::size_t steps) {
    auto o = make_oracle(spec == "auto" ? auto_oracle(p) : spec, p, steps);
    if (o->number_of_generators() != p.number_of_generators()) {
      throw UsageError("oracle " + o->description() + " has "
                       + std::to_string(o->number_of_generators())
                       + " generators, the presentation has "
                       + std::to_string(p.number_of_generators()));
    }
    return o;
  }

  ////////////////////////////////////////////////////////////////////////
  // Shared options
  ////////////////////////////////////////////////////////////////////////

  struct Config {
    std::string presentation;
    std::string oracle = "auto";
    std::size_t rounds = 16;
    std::size_t vertices = 1'000'000;
    std::size_t steps = 100'000;
    std::size_t radius = 4;
    bool        serial = false;

    Presentation load() const {
      return read_presentation(presentation);
    }
    Budget budget() const {
      Budget b{rounds, vertices};
      b.validate();
      return b;
    }
    OraclePtr oracle_for(Presentation const& p) const {
      return resolve_oracle(oracle, p, steps);
    }
    Exec exec() const {
      return serial ? Exec::serial : Exec::parallel;
    }
  };

  void presentation_option(CLI::App* app, Config& cfg) {
    app->add_option("-p,--presentation", cfg.presentation, "Presentation file")->required();
  }

  void budget_options(CLI::App* app, Config& cfg) {
    app->add_option("--rounds", cfg.rounds, "Stephen rounds")->capture_default_str();
    app->add_option("--vertices", cfg.vertices, "Vertex budget")->capture_default_str();
  }

  void oracle_option(CLI::App* app, Config& cfg) {
    app->add_option("--oracle",
                    cfg.oracle,
                    "fg:<rank>, bs:<n>, scary, rw:<rules file>, fp:<spec>,<spec> or auto")
        ->capture_default_str();
    app->add_option("--steps", cfg.steps, "Rewriting step budget")->capture_default_str();
  }

  std::string yes_no(bool b) {
    return b ? "yes" : "no";
  }

  int answer(TriBool t) {
    std::cout << t << '\n';
    return exit_code(t);
  }

  ////////////////////////////////////////////////////////////////////////
  // Subcommands
  ////////////////////////////////////////////////////////////////////////

  using Action = std::function<int()>;

  void add_stephen(CLI::App& app, Config& cfg, Action& action) {
    auto* st = app.add_subcommand("stephen", "Stephen's procedure")->require_subcommand(1);

    static std::string w, u, dot, json;
    static bool        munn = false;
    static bool        with_oracle = false;

    auto* approx = st->add_subcommand("approx", "Approximate SGamma(w)");
    presentation_option(approx, cfg);
    budget_options(approx, cfg);
    approx->add_option("-w,--word", w, "Word")->required();
    approx->add_option("--dot", dot, "Write the graph as DOT (- for stdout)");
    approx->add_option("--json", json, "Write the graph as JSON (- for stdout)");
    approx->callback([&] {
      action = [&] {
        auto p = cfg.load();
        auto a = approximate(p, p.word(w), cfg.budget());
        if (!dot.empty()) {
          emit(dot, to_dot(a.graph, p.alphabet()));
        }
        if (!json.empty()) {
          emit(json, approximant_to_json(a, p.alphabet()).dump(2) + "\n");
        }
        if (dot != "-" && json != "-") {
          std::cout << "vertices " << a.graph.number_of_vertices() << ", rounds "
                    << a.rounds_done << ", saturated " << yes_no(a.saturated)
                    << ", limit hit " << yes_no(a.limit_hit) << '\n';
        }
        return 0;
      };
    });

    auto* geq = st->add_subcommand("test-geq", "Is [u] >= [w]?");
    presentation_option(geq, cfg);
    budget_options(geq, cfg);
    geq->add_option("-u", u, "Word u")->required();
    geq->add_option("-w,--word", w, "Word w")->required();
    geq->callback([&] {
      action = [&] {
        auto p = cfg.load();
        return answer(test_geq(p, p.word(u), p.word(w), cfg.budget()));
      };
    });

    auto* eq = st->add_subcommand("test-equal", "Is [u] = [w]?");
    presentation_option(eq, cfg);
    budget_options(eq, cfg);
    oracle_option(eq, cfg);
    eq->add_option("-u", u, "Word u")->required();
    eq->add_option("-w,--word", w, "Word w")->required();
    eq->add_flag("--munn", munn, "Refute by Munn trees (no relations only)");
    eq->callback([&] {
      with_oracle = eq->count("--oracle") > 0;
      action      = [&] {
        auto      p = cfg.load();
        OraclePtr o = with_oracle ? cfg.oracle_for(p) : nullptr;
        return answer(test_equal(p, p.word(u), p.word(w), cfg.budget(), o.get(), munn));
      };
    });

    auto* ru = st->add_subcommand("right-unit", "Is [w w^-1] = 1?");
    presentation_option(ru, cfg);
    budget_options(ru, cfg);
    oracle_option(ru, cfg);
    ru->add_option("-w,--word", w, "Word w")->required();
    ru->callback([&] {
      with_oracle = ru->count("--oracle") > 0;
      action      = [&] {
        auto      p = cfg.load();
        OraclePtr o = with_oracle ? cfg.oracle_for(p) : nullptr;
        return answer(test_right_unit(p, p.word(w), cfg.budget(), o.get()));
      };
    });
  }

  void add_distortion(CLI::App& app, Config& cfg, Action& action) {
    auto* d = app.add_subcommand("distortion", "Distortion tables")->require_subcommand(1);
    static std::string w, json;
    auto* prof = d->add_subcommand("profile", "Empirical phi_hat for SGamma(w)");
    presentation_option(prof, cfg);
    budget_options(prof, cfg);
    oracle_option(prof, cfg);
    prof->add_option("-w,--word", w, "Word (default: empty)");
    prof->add_option("--radius", cfg.radius, "Cayley ball radius")->capture_default_str();
    prof->add_option("--json", json, "Write the table as JSON (- for stdout)");
    prof->add_flag("--serial", cfg.serial, "Use the serial kernels");
    prof->callback([&] {
      action = [&] {
        auto p = cfg.load();
        if (!p.e_unitary_asserted()) {
          throw Refusal("the presentation is not flagged e_unitary");
        }
        auto o = cfg.oracle_for(p);
        auto t = distortion_profile(p, p.word(w), *o, cfg.budget(), cfg.radius, cfg.exec());
        if (!json.empty()) {
          emit(json, distortion_to_json(t, p.alphabet()).dump(2) + "\n");
        }
        if (json != "-") {
          std::cout << distortion_to_text(t, p.alphabet());
        }
        return 0;
      };
    });
  }

  void print_max(Presentation const& p, MaxResult const& m) {
    std::cout << p.to_string(m.representative) << '\n';
    std::cout << "sigma " << p.to_string(m.sigma_class) << '\n';
    std::cout << "radius " << m.radius_used << '\n';
    for (auto const& s : m.certificate) {
      std::cout << "  " << p.to_string(s.normal_form) << (s.in_sg ? " S_g" : "")
                << (s.in_gsg ? " gS_g" : "") << '\n';
    }
  }

  void add_finverse(CLI::App& app, Config& cfg, Action& action) {
    auto* f = app.add_subcommand("finverse", "Maximal elements of sigma-classes")
                  ->require_subcommand(1);
    static std::string g, s, t, method = "free-product";
    static std::size_t max_radius = 6, n = 2;

    auto* mx = f->add_subcommand("max", "Maximum of the sigma-class of g");
    presentation_option(mx, cfg);
    budget_options(mx, cfg);
    oracle_option(mx, cfg);
    mx->add_option("-g", g, "Word")->required();
    mx->add_option("--method", method, "sprawling, free-product or gray")
        ->check(CLI::IsMember({"sprawling", "free-product", "gray"}))
        ->capture_default_str();
    mx->add_option("--max-radius", max_radius, "Largest ball radius searched")
        ->capture_default_str();
    mx->callback([&] {
      action = [&] {
        auto p = cfg.load();
        auto o = cfg.oracle_for(p);
        auto w = p.word(g);
        if (method == "gray") {
          std::cout << p.to_string(gray_normal_max(p, w, *o)) << '\n';
          return 0;
        }
        auto m = method == "sprawling" ? sprawling_max(p, w, *o, cfg.budget(), max_radius)
                                       : free_product_max(p, w, *o, cfg.budget(), max_radius);
        if (!m) {
          std::cout << "unknown (budget exhausted)\n";
          return 2;
        }
        print_max(p, *m);
        return 0;
      };
    });

    auto* wd = f->add_subcommand("wedge", "Common upper bound of sigma-related s and t");
    presentation_option(wd, cfg);
    budget_options(wd, cfg);
    oracle_option(wd, cfg);
    wd->add_option("-s", s, "Word s")->required();
    wd->add_option("-t", t, "Word t")->required();
    wd->callback([&] {
      action = [&] {
        auto p = cfg.load();
        auto o = cfg.oracle_for(p);
        auto r = wedge_upper_bound(p, p.word(s), p.word(t), *o, cfg.budget());
        if (!r) {
          std::cout << "unknown (budget exhausted)\n";
          return 2;
        }
        std::cout << p.to_string(r->upper_bound) << '\n';
        return 0;
      };
    });

    auto* ph = f->add_subcommand("phi", "Distortion bound from class maxima");
    presentation_option(ph, cfg);
    budget_options(ph, cfg);
    oracle_option(ph, cfg);
    ph->add_option("-n", n, "Word length")->capture_default_str();
    ph->add_option("--max-radius", max_radius, "Largest ball radius searched")
        ->capture_default_str();
    ph->callback([&] {
      action = [&] {
        auto        p = cfg.load();
        auto        o = cfg.oracle_for(p);
        Budget      b = cfg.budget();
        MaxFunction fn = [&](Word const& w) -> std::optional<Word> {
          auto m = free_product_max(p, w, *o, b, max_radius);
          return m ? std::optional<Word>(m->representative) : std::nullopt;
        };
        auto phi = phi_from_max(p.number_of_generators(), fn, n);
        if (!phi) {
          std::cout << "unknown (budget exhausted)\n";
          return 2;
        }
        std::cout << *phi << '\n';
        return 0;
      };
    });
  }

  void add_prefix(CLI::App& app, Config& cfg, Action& action) {
    auto* pr = app.add_subcommand("prefix", "Prefix monoid membership")->require_subcommand(1);
    static std::string g, phi = "none", units;
    auto* mem = pr->add_subcommand("member", "Is sigma(g) in the prefix monoid?");
    presentation_option(mem, cfg);
    budget_options(mem, cfg);
    oracle_option(mem, cfg);
    mem->add_option("-g", g, "Word")->required();
    mem->add_option("--phi", phi, "Length bound: none, linear (n) or quadratic (n^2)")
        ->check(CLI::IsMember({"none", "linear", "quadratic"}))
        ->capture_default_str();
    mem->add_option("--units",
                    units,
                    "Rewriting rules deciding right units (default: <presentation>.units "
                    "if present)");
    mem->add_option("--radius", cfg.radius, "Cayley ball radius")->capture_default_str();
    mem->callback([&] {
      action = [&] {
        auto p = cfg.load();
        auto o = cfg.oracle_for(p);
        std::string rules = units;
        if (rules.empty()) {
          auto sibling = std::filesystem::path(cfg.presentation).replace_extension(".units");
          if (std::filesystem::exists(sibling)) {
            rules = sibling.string();
          }
        }
        RightUnitTester tester
            = rules.empty()
                  ? stephen_right_unit_tester(p, cfg.budget(), o)
                  : rewriting_right_unit_tester(read_rules(rules, p.alphabet()), cfg.steps);
        std::optional<LengthBound> bound;
        if (phi == "linear") {
          bound = [](std::size_t k) { return k; };
        } else if (phi == "quadratic") {
          bound = [](std::size_t k) { return k * k; };
        }
        return answer(prefix_membership(p, p.word(g), *o, bound, tester, cfg.budget(), cfg.radius));
      };
    });
  }

  template <typename T>
  int propa_check(std::string const& x, std::string const& w, T const& tol) {
    auto X  = metric_from_json(read_json_file(x));
    auto xi = witness_from_json<T>(read_json_file(w));
    auto r  = check_witness(X, xi, tol);
    std::cout << report_to_json(r).dump(2) << '\n';
    return r.ok() ? 0 : 1;
  }

  template <typename T>
  int propa_transport(std::string const& x,
                      std::string const& y,
                      std::string const& f,
                      std::string const& w,
                      std::string const& out,
                      T const&           tol,
                      Exec               exec) {
    auto X  = metric_from_json(read_json_file(x));
    auto Y  = metric_from_json(read_json_file(y));
    auto cm = analyze_contraction(X, Y, map_from_json(read_json_file(f)));
    auto xi = witness_from_json<T>(read_json_file(w));
    auto r  = transport_witness(cm, xi, tol, exec);
    auto report = check_witness(X, r.zeta, tol);
    std::cerr << "k " << cm.k << ", c " << r.c << ", S' " << r.zeta.S << ", check "
              << (report.ok() ? "passed" : "FAILED") << '\n';
    emit(out, witness_to_json(r.zeta).dump(2) + "\n");
    if (!report.ok()) {
      for (auto const& v : report.violations) {
        std::cerr << to_string(v) << '\n';
      }
      return EXIT_INTERNAL;
    }
    return 0;
  }

  void add_propa(CLI::App& app, Config& cfg, Action& action) {
    auto* pa = app.add_subcommand("propa", "Property A witnesses")->require_subcommand(1);
    static std::string x, y, f, w, out = "-", dir = ".";
    static bool        exact = false;
    static double      tol   = 1e-9;
    static std::uint64_t seed = 1;

    auto* ck = pa->add_subcommand("check", "Verify a witness on a metric space");
    ck->add_option("-X", x, "Metric JSON")->required();
    ck->add_option("-w,--witness", w, "Witness JSON")->required();
    ck->add_flag("--exact", exact, "Rational arithmetic");
    ck->add_option("--tol", tol, "Norm tolerance (float mode)")->capture_default_str();
    ck->callback([&] {
      action = [&] {
        return exact ? propa_check<Rational>(x, w, Rational(0)) : propa_check<double>(x, w, tol);
      };
    });

    auto* tr = pa->add_subcommand("transport", "Transport a witness on Y back to X");
    tr->add_option("-X", x, "Metric JSON for X")->required();
    tr->add_option("-Y", y, "Metric JSON for Y")->required();
    tr->add_option("-f,--map", f, "Map JSON")->required();
    tr->add_option("-w,--witness", w, "Witness JSON on Y")->required();
    tr->add_option("-o,--output", out, "Output witness (- for stdout)")->capture_default_str();
    tr->add_flag("--exact", exact, "Rational arithmetic");
    tr->add_option("--tol", tol, "Norm tolerance (float mode)")->capture_default_str();
    tr->add_flag("--serial", cfg.serial, "Use the serial kernel");
    tr->callback([&] {
      action = [&] {
        return exact ? propa_transport<Rational>(x, y, f, w, out, Rational(0), cfg.exec())
                     : propa_transport<double>(x, y, f, w, out, tol, cfg.exec());
      };
    });

    auto* rnd = pa->add_subcommand("random", "Write a random instance x/y/map/xi.json");
    rnd->add_option("--seed", seed, "Seed")->capture_default_str();
    rnd->add_option("-d,--dir", dir, "Output directory")->capture_default_str();
    rnd->add_flag("--exact", exact, "Rational weights");
    rnd->callback([&] {
      action = [&] {
        std::mt19937_64       rng(seed);
        std::filesystem::path d(dir);
        std::error_code       ec;
        std::filesystem::create_directories(d, ec);
        if (ec) {
          throw IoError("cannot create " + d.string() + ": " + ec.message());
        }
        auto write = [&](auto const& inst) {
          write_json_file(d / "x.json", metric_to_json(inst.X));
          write_json_file(d / "y.json", metric_to_json(inst.Y));
          write_json_file(d / "map.json", map_to_json(inst.f));
          write_json_file(d / "xi.json", witness_to_json(inst.xi));
        };
        if (exact) {
          write(random_instance<Rational>(rng));
        } else {
          write(random_instance<double>(rng));
        }
        return 0;
      };
    });
  }

  void add_fixture(CLI::App& app, Action& action) {
    auto* fx = app.add_subcommand("fixture", "Print a fixture presentation")->require_subcommand(1);
    static std::string              out = "-", t_name = "t", e_name = "e";
    static unsigned                 n   = 2;
    static std::vector<std::string> gens, rels, s_words, g_gens, g_rels, h_gens, h_rels, embed;

    auto print = [&](Presentation const& p) { emit(out, to_string(p)); };

    auto* sc = fx->add_subcommand("scary", "One-relator fixture with unbounded distortion");
    sc->add_option("-o,--output", out)->capture_default_str();
    sc->callback([&, print] { action = [&, print] { print(fixture_scary()); return 0; }; });

    auto* bs = fx->add_subcommand("bs", "Inv<a, b | a b a^-n b^-1 = 1>");
    bs->add_option("-n", n, "n >= 1")->capture_default_str();
    bs->add_option("-o,--output", out)->capture_default_str();
    bs->callback([&, print] {
      action = [&, print] {
        if (n == 0) {
          throw UsageError("n must be at least 1");
        }
        print(fixture_bs(n));
        return 0;
      };
    });

    auto* gr = fx->add_subcommand("gray", "Gray's construction over G = Gp<X | r_i>");
    gr->add_option("--gens", gens, "Generators X")->required();
    gr->add_option("--relators", rels, "Relators r_1, ..., r_m")->required();
    gr->add_option("--s", s_words, "Words s_i")->required();
    gr->add_option("--t", t_name)->capture_default_str();
    gr->add_option("-o,--output", out)->capture_default_str();
    gr->callback([&, print] {
      action = [&, print] {
        Alphabet          x(gens);
        std::vector<Word> r, s;
        for (auto const& text : rels) {
          r.push_back(parse_word(text, x));
        }
        for (auto const& text : s_words) {
          s.push_back(parse_word(text, x));
        }
        print(fixture_gray(x, r, s, t_name));
        return 0;
      };
    });

    auto* cl = fx->add_subcommand("clifford", "Clifford monoid of H' -> G");
    cl->add_option("--g-gens", g_gens, "Generators Y of G")->required();
    cl->add_option("--g-rels", g_rels, "Relators of G");
    cl->add_option("--h-gens", h_gens, "Generators X' of H'")->required();
    cl->add_option("--h-rels", h_rels, "Relators of H'");
    cl->add_option("--embed", embed, "Image in Y of each generator of X'")->required();
    cl->add_option("--e", e_name)->capture_default_str();
    cl->add_option("-o,--output", out)->capture_default_str();
    cl->callback([&, print] {
      action = [&, print] {
        GroupPresentation g{Alphabet(g_gens), {}}, h{Alphabet(h_gens), {}};
        for (auto const& text : g_rels) {
          g.relators.push_back(parse_word(text, g.alphabet));
        }
        for (auto const& text : h_rels) {
          h.relators.push_back(parse_word(text, h.alphabet));
        }
        std::vector<gen_type> e;
        for (auto const& name : embed) {
          auto w = parse_word(name, g.alphabet);
          if (w.size() != 1 || w[0].is_inverse()) {
            throw UsageError("--embed expects generator names of G");
          }
          e.push_back(w[0].gen());
        }
        print(fixture_clifford(g, h, e, e_name));
        return 0;
      };
    });
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for finitely presented inverse monoids", "invmon"};
  app.require_subcommand(1);
  Config cfg;
  Action action;
  add_stephen(app, cfg, action);
  add_distortion(app, cfg, action);
  add_finverse(app, cfg, action);
  add_prefix(app, cfg, action);
  add_propa(app, cfg, action);
  add_fixture(app, action);

  try {
    app.parse(argc, argv);
  } catch (CLI::Success const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return EXIT_USAGE;
  }

  try {
    return action();
  } catch (UsageError const& e) {
    std::cerr << "invmon: " << e.what() << '\n';
    return EXIT_USAGE;
  } catch (ParseError const& e) {
    std::cerr << "invmon: parse error: " << e.what() << '\n';
    return EXIT_DATAERR;
  } catch (IoError const& e) {
    std::cerr << "invmon: " << e.what() << '\n';
    return EXIT_DATAERR;
  } catch (InvalidArgument const& e) {
    std::cerr << "invmon: invalid input: " << e.what() << '\n';
    return EXIT_DATAERR;
  } catch (Refusal const& e) {
    std::cerr << "invmon: refused: " << e.what() << '\n';
    return EXIT_REFUSAL;
  } catch (std::exception const& e) {
    std::cerr << "invmon: internal error: " << e.what() << '\n';
    return EXIT_INTERNAL;
  }
}
