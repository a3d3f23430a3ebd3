#pragma once

// JSON monoid files:
//   { "name": "C2", "size": 2, "identity": 0,
//     "table": [[0,1],[1,0]], "theta": [0,1], "names": ["e","g"] }
// Indices are 0-based. "theta" and "names" are optional; when present,
// theta is validated on load.

#include <filesystem>
#include <optional>
#include <string_view>

#include "json.hpp"
#include "polyext/monoid.hpp"

namespace polyext {

  struct MonoidSpec {
    FiniteMonoid         monoid;
    std::optional<Theta> theta;
  };

  MonoidSpec parse_monoid_json(nlohmann::json const& doc);
  MonoidSpec parse_monoid_json(std::string_view text);
  MonoidSpec load_monoid_json(std::filesystem::path const& path);

  nlohmann::json to_json(FiniteMonoid const&         m,
                         std::optional<Theta> const& theta = std::nullopt);

  // Either a bare array [..] or an object with a "theta" array.
  Theta parse_theta_json(nlohmann::json const& doc);
  Theta load_theta_json(std::filesystem::path const& path);

}  // namespace polyext
