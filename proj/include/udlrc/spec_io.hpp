#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "udlrc/finite_field.hpp"
#include "udlrc/locality.hpp"

namespace udlrc {

/// Parsed spec file. Two interchangeable encodings are accepted:
///
///     # comment
///     q: 5
///     t: 5            (optional, defaults to n_Gab)
///     k: 4
///     seed: 7         (optional)
///     class: r=2 delta=3 m=1
///     class: r=3 delta=2 n=4
///
/// or a JSON object {"q":5,"t":5,"k":4,"seed":7,"classes":[{"r":2,"delta":3,"m":1}, ...]}.
/// Each class gives either m (number of local groups) or n (class length).
struct SpecFile {
    LocalitySpec spec;
    std::optional<std::uint64_t> seed;
};

[[nodiscard]] SpecFile parse_spec(std::string_view text);
[[nodiscard]] SpecFile load_spec(const std::filesystem::path& path);

/// One-line canonical rendering, e.g. "q=5 t=5 k=4 classes=[(n=4,r=2,delta=3),(n=4,r=3,delta=2)]".
/// t is left out when the spec leaves it to default.
[[nodiscard]] std::string canonical_spec(const LocalitySpec& spec);
/// FNV-1a 64 of canonical_spec, as 16 hex digits.
[[nodiscard]] std::string spec_digest(const LocalitySpec& spec);

/// Extension elements travel as base-q digit lists, least-significant coordinate first.
[[nodiscard]] nlohmann::json elem_to_json(const ExtElem& x);
[[nodiscard]] ExtElem elem_from_json(const ExtField& field, const nlohmann::json& j);
[[nodiscard]] nlohmann::json word_to_json(std::span<const ExtElem> word);
[[nodiscard]] std::vector<ExtElem> word_from_json(const ExtField& field, const nlohmann::json& j);
/// Like word_from_json, but null entries mark erasures.
[[nodiscard]] std::vector<std::optional<ExtElem>> received_from_json(const ExtField& field, const nlohmann::json& j);
[[nodiscard]] std::string format_elem(const ExtElem& x);

/// Deterministic message: coordinates are successive mt19937_64 outputs reduced mod q.
[[nodiscard]] std::vector<ExtElem> random_message(const ExtField& field, std::size_t k, std::uint64_t seed);

}  // namespace udlrc
