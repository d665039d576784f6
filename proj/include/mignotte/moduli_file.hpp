#pragma once

//! Moduli file: the CLI's on-disk form of a constructed sequence. The
//! file stores the moduli together with their provenance (seed, t, and
//! the difference product), and the loader re-derives the moduli from
//! the provenance, rejecting any mismatch.
//!
//!   {
//!     "version": 1,
//!     "n": 3,
//!     "k_hint": 2,                      // optional
//!     "moduli": ["3", "4", "5"],
//!     "provenance": {
//!       "seed": ["1", "2", "3"],
//!       "t": "1",
//!       "P": "2"
//!     }
//!   }
//!
//! All large integers are decimal strings. The writer is canonical
//! (UTF-8, LF, keys in the order above), so re-running a command
//! reproduces the file byte for byte.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mignotte/construction.hpp"
#include "mignotte/numtheory.hpp"

namespace mignotte {

struct ModuliFile {
  MignotteModuli moduli;
  std::optional<std::size_t> k_hint;
};

inline std::string write_moduli_file(const MignotteModuli& m,
                                     std::optional<std::size_t> k_hint = {}) {
  if (k_hint) check_threshold_range(*k_hint, m.size());
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["n"] = m.size();
  if (k_hint) j["k_hint"] = *k_hint;
  nlohmann::ordered_json moduli = nlohmann::ordered_json::array();
  for (const Int& x : m.moduli()) moduli.push_back(x.str());
  j["moduli"] = std::move(moduli);
  nlohmann::ordered_json seed = nlohmann::ordered_json::array();
  for (const Int& q : m.seed().terms()) seed.push_back(q.str());
  j["provenance"]["seed"] = std::move(seed);
  j["provenance"]["t"] = m.iterations().str();
  j["provenance"]["P"] = m.shift_product().str();
  return j.dump(2) + "\n";
}

inline ModuliFile load_moduli_file(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed moduli file: ") + e.what());
  }
  std::vector<Int> listed;
  std::vector<Int> seed_terms;
  Int t;
  Int listed_shift;
  std::optional<std::size_t> k_hint;
  std::size_t n = 0;
  try {
    if (j.at("version").get<int>() != 1)
      throw Error("unsupported moduli file version");
    n = j.at("n").get<std::size_t>();
    if (j.contains("k_hint")) k_hint = j.at("k_hint").get<std::size_t>();
    for (const auto& s : j.at("moduli"))
      listed.push_back(parse_natural(s.get<std::string>()));
    for (const auto& s : j.at("provenance").at("seed"))
      seed_terms.push_back(parse_natural(s.get<std::string>()));
    t = parse_natural(j.at("provenance").at("t").get<std::string>());
    listed_shift =
        parse_natural(j.at("provenance").at("P").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed moduli file: ") + e.what());
  }
  if (listed.size() != n || seed_terms.size() != n)
    throw Error("moduli file n mismatch");
  // Rebuild from provenance; the listed values must agree exactly.
  MignotteModuli rebuilt(SeedSequence(std::move(seed_terms)), t);
  if (rebuilt.shift_product() != listed_shift)
    throw Error("moduli file provenance mismatch (P)");
  if (rebuilt.moduli() != listed)
    throw Error("moduli file provenance mismatch (moduli)");
  if (k_hint) check_threshold_range(*k_hint, n);
  return ModuliFile{std::move(rebuilt), k_hint};
}

}  // namespace mignotte
