#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqidx/burnside.hpp"
#include "eqidx/invertible.hpp"

namespace eqidx::cli {

using nlohmann::json;

/// Bad input at a JSON pointer location.
class InputError : public std::runtime_error {
 public:
  InputError(std::string path, const std::string& msg) : std::runtime_error(msg), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

std::string child(const std::string& path, const std::string& key);
std::string child(const std::string& path, std::size_t index);

const json& require(const json& j, const std::string& key, const std::string& path);
const json* optional(const json& j, const std::string& key);

std::int64_t as_int(const json& j, const std::string& path);
bool as_bool(const json& j, const std::string& path);
/// {"num":..,"den":..}, an integer, or a string "a/b".
Rational as_rational(const json& j, const std::string& path);
IntMatrix as_matrix(const json& j, const std::string& path);

/// {"cyclic": n}, {"permutations": [[...]]}, {"phases": [[...]], "dim": n}
/// or {"table": [[...]]}.
FiniteGroup parse_group(const json& j, const std::string& path);

/// A subgroup by label "H<order>_<index>".
SubgroupId parse_subgroup(const SubgroupLattice& lat, const json& j, const std::string& path);
/// A conjugacy class, given by the label of any of its members.
ClassId parse_class(const SubgroupLattice& lat, const json& j, const std::string& path);

/// {"<label>": coeff, ...}, [["<label>", coeff], ...] or {"terms": [...]}.
BurnsideElement parse_element(const RingPtr& ring, const json& j, const std::string& path);

json to_json(const Rational& r);
json to_json(const BurnsideElement& b);

}  // namespace eqidx::cli
