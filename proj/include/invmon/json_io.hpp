#pragma once

// JSON formats used by the command line tool.
//
//   metric   {"distance": [[0, 1, null], ...]}          null is infinity
//   map      {"f": [0, 0, 1, ...]}
//   witness  {"eps": .., "R": .., "S": .., "xi": {"0": {"0": 1, ...}, ...}}
//
// Weights may be JSON numbers or strings "p/q"; exact witnesses are written
// with strings.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "geometry.hpp"
#include "presentation.hpp"
#include "propa.hpp"
#include "stephen.hpp"

namespace invmon {

  using Json = nlohmann::ordered_json;

  //! IoError if unreadable, ParseError if not JSON.
  Json read_json_file(std::filesystem::path const& path);
  void write_json_file(std::filesystem::path const& path, Json const& j);

  //! Throws ParseError (line 0) on malformed content, InvalidArgument if the
  //! distances violate the metric axioms.
  FinExtMetric metric_from_json(Json const& j);
  Json         metric_to_json(FinExtMetric const& m);

  std::vector<std::size_t> map_from_json(Json const& j);
  Json                     map_to_json(std::vector<std::size_t> const& f);

  template <typename T>
  Witness<T> witness_from_json(Json const& j);
  template <typename T>
  Json witness_to_json(Witness<T> const& w);

  Json report_to_json(WitnessReport const& r);

  //! Vertices, roots, edges (with generator names) and the run status.
  Json approximant_to_json(Approximant const& a, Alphabet const& alphabet);

  Json        distortion_to_json(DistortionTable const& t, Alphabet const& alphabet);
  std::string distortion_to_text(DistortionTable const& t, Alphabet const& alphabet);

  extern template Witness<double>   witness_from_json<double>(Json const&);
  extern template Witness<Rational> witness_from_json<Rational>(Json const&);
  extern template Json              witness_to_json<double>(Witness<double> const&);
  extern template Json              witness_to_json<Rational>(Witness<Rational> const&);

}  // namespace invmon
