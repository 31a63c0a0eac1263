#include "invmon/json_io.hpp"

#include <fstream>
#include <sstream>

#include "invmon/error.hpp"

namespace invmon {

  namespace {
    [[noreturn]] void bad(std::string const& msg) {
      throw ParseError(msg, 0, 0);
    }

    Json const& field(Json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        bad(std::string("missing field \"") + key + "\"");
      }
      return j.at(key);
    }

    Rational parse_rational(std::string const& s) {
      auto slash = s.find('/');
      try {
        if (slash == std::string::npos) {
          return Rational(boost::multiprecision::cpp_int(s));
        }
        boost::multiprecision::cpp_int num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) {
          bad("zero denominator in \"" + s + "\"");
        }
        return Rational(num, den);
      } catch (std::runtime_error const&) {
        bad("not a rational: \"" + s + "\"");
      }
    }

    template <typename T>
    T number(Json const& j) {
      if (j.is_string()) {
        Rational r = parse_rational(j.get<std::string>());
        if constexpr (std::is_same_v<T, double>) {
          return to_double(r);
        } else {
          return r;
        }
      }
      if (j.is_number_integer()) {
        return T(j.get<std::int64_t>());
      }
      if (j.is_number()) {
        return T(j.get<double>());
      }
      bad("expected a number");
    }

    std::size_t index(Json const& j) {
      if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        bad("expected a point index");
      }
      return j.get<std::size_t>();
    }

    std::size_t index_key(std::string const& s) {
      std::size_t pos = 0;
      std::size_t v   = 0;
      try {
        v = std::stoul(s, &pos);
      } catch (std::exception const&) {
        pos = 0;
      }
      if (pos == 0 || pos != s.size() || s[0] == '-') {
        bad("expected a point index as key, got \"" + s + "\"");
      }
      return v;
    }

    template <typename T>
    Json weight_json(T const& x) {
      if constexpr (std::is_same_v<T, double>) {
        return x;
      } else {
        return x.str();
      }
    }
  }  // namespace

  Json read_json_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw IoError("cannot open " + path.string());
    }
    try {
      return Json::parse(in);
    } catch (nlohmann::json::parse_error const& e) {
      throw ParseError(path.string() + ": " + e.what(), 0, 0);
    }
  }

  void write_json_file(std::filesystem::path const& path, Json const& j) {
    std::ofstream out(path);
    if (!out) {
      throw IoError("cannot write " + path.string());
    }
    out << j.dump(2) << '\n';
  }

  FinExtMetric metric_from_json(Json const& j) {
    Json const& rows = field(j, "distance");
    if (!rows.is_array()) {
      bad("\"distance\" must be an array of rows");
    }
    std::vector<std::vector<ExtReal>> d;
    for (auto const& row : rows) {
      if (!row.is_array()) {
        bad("\"distance\" must be an array of rows");
      }
      auto& r = d.emplace_back();
      for (auto const& v : row) {
        r.push_back(v.is_null() ? ExtReal::infinity() : ExtReal(number<double>(v)));
      }
    }
    return FinExtMetric(std::move(d));
  }

  Json metric_to_json(FinExtMetric const& m) {
    Json rows = Json::array();
    for (auto const& row : m.matrix()) {
      Json r = Json::array();
      for (auto v : row) {
        r.push_back(v.is_finite() ? Json(v.value()) : Json(nullptr));
      }
      rows.push_back(std::move(r));
    }
    return Json{{"distance", std::move(rows)}};
  }

  std::vector<std::size_t> map_from_json(Json const& j) {
    Json const& f = field(j, "f");
    if (!f.is_array()) {
      bad("\"f\" must be an array");
    }
    std::vector<std::size_t> out;
    for (auto const& v : f) {
      out.push_back(index(v));
    }
    return out;
  }

  Json map_to_json(std::vector<std::size_t> const& f) {
    return Json{{"f", f}};
  }

  template <typename T>
  Witness<T> witness_from_json(Json const& j) {
    Witness<T> w;
    w.eps          = number<T>(field(j, "eps"));
    w.R            = number<double>(field(j, "R"));
    w.S            = number<double>(field(j, "S"));
    Json const& xi = field(j, "xi");
    if (!xi.is_object()) {
      bad("\"xi\" must be an object");
    }
    for (auto const& [key, vec] : xi.items()) {
      std::size_t x = index_key(key);
      if (x >= w.xi.size()) {
        w.xi.resize(x + 1);
      }
      if (!vec.is_object()) {
        bad("xi_" + key + " must be an object");
      }
      for (auto const& [p, v] : vec.items()) {
        T value = number<T>(v);
        if (value != T(0)) {
          w.xi[x].emplace_back(index_key(p), value);
        }
      }
      std::sort(w.xi[x].begin(), w.xi[x].end(), [](auto const& a, auto const& b) {
        return a.first < b.first;
      });
    }
    return w;
  }

  template <typename T>
  Json witness_to_json(Witness<T> const& w) {
    Json xi = Json::object();
    for (std::size_t x = 0; x < w.xi.size(); ++x) {
      Json v = Json::object();
      for (auto const& [p, value] : w.xi[x]) {
        v[std::to_string(p)] = weight_json(value);
      }
      xi[std::to_string(x)] = std::move(v);
    }
    return Json{{"eps", weight_json(w.eps)}, {"R", w.R}, {"S", w.S}, {"xi", std::move(xi)}};
  }

  template Witness<double>   witness_from_json<double>(Json const&);
  template Witness<Rational> witness_from_json<Rational>(Json const&);
  template Json              witness_to_json<double>(Witness<double> const&);
  template Json              witness_to_json<Rational>(Witness<Rational> const&);

  Json report_to_json(WitnessReport const& r) {
    Json v = Json::array();
    for (auto const& x : r.violations) {
      v.push_back(to_string(x));
    }
    return Json{{"ok", r.ok()}, {"violations", std::move(v)}};
  }

  Json approximant_to_json(Approximant const& a, Alphabet const& alphabet) {
    Json edges = Json::array();
    for (auto const& e : a.graph.edges()) {
      edges.push_back(Json::array({e.source, alphabet.name(e.gen), e.target}));
    }
    return Json{{"word", to_string(a.source_word, alphabet)},
                {"vertices", a.graph.number_of_vertices()},
                {"alpha", a.graph.alpha()},
                {"beta", a.graph.beta()},
                {"rounds", a.rounds_done},
                {"saturated", a.saturated},
                {"limit_hit", a.limit_hit},
                {"edges", std::move(edges)}};
  }

  Json distortion_to_json(DistortionTable const& t, Alphabet const& alphabet) {
    Json rows = Json::array();
    for (auto const& r : t.rows) {
      rows.push_back(Json{
          {"r", r.r},
          {"phi_hat", r.phi_hat},
          {"witness", Json::array({to_string(r.nf_x, alphabet), to_string(r.nf_y, alphabet)})}});
    }
    return Json{{"radius", t.radius},
                {"budget",
                 Json{{"rounds", t.budget.max_rounds}, {"vertices", t.budget.max_vertices}}},
                {"clipped", t.clipped},
                {"vertices", t.vertices},
                {"rounds", t.rounds},
                {"pairs_beyond_radius", t.pairs_beyond_radius},
                {"rows", std::move(rows)}};
  }

  std::string distortion_to_text(DistortionTable const& t, Alphabet const& alphabet) {
    std::ostringstream os;
    os << "# vertices " << t.vertices << ", rounds " << t.rounds << ", radius " << t.radius
       << (t.clipped ? ", not saturated" : ", saturated") << '\n';
    os << "# pairs beyond radius " << t.pairs_beyond_radius << '\n';
    os << "r\tphi_hat\twitness\n";
    for (auto const& r : t.rows) {
      os << r.r << '\t' << r.phi_hat << '\t' << to_string(r.nf_x, alphabet) << " , "
         << to_string(r.nf_y, alphabet) << '\n';
    }
    return os.str();
  }

}  // namespace invmon
