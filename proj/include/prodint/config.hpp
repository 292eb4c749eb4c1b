#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "prodint/bool_abs.hpp"
#include "prodint/interval.hpp"
#include "prodint/parity.hpp"

namespace prodint {

struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class num_domain_kind { interval, parity, sign, congruence, boolean };
enum class product_kind { none, cartesian, reduced, granger, power };
enum class reduction_kind {
  interval_parity,
  interval_congruence,
  intervals_to_diff
};
enum class exponent_kind { parity, boolean, interval_atoms };
enum class array_power_mode { off, value_parity, index_parity };

// One exponent atom of a power configuration.
using exp_atom = std::variant<interval, parity, bool_abs>;

std::string exp_atom_str(const exp_atom &a);
bool exp_atoms_disjoint(const exp_atom &a, const exp_atom &b);

struct run_config {
  std::set<num_domain_kind> domains;
  bool use_diff = false;
  product_kind product = product_kind::none;
  std::vector<reduction_kind> reductions;

  std::string power_pivot;
  exponent_kind power_exponent = exponent_kind::interval_atoms;
  std::vector<exp_atom> power_atoms;

  array_power_mode array_power = array_power_mode::off;

  int widening_delay = 1;
  std::int64_t visit_cap = 10000;
  bool diff_backflow = false;

  // CLI-level knobs carried along for reporting.
  bool oracle = false;
  std::string format = "text";
  std::string out_path;

  bool has(num_domain_kind k) const { return domains.count(k) != 0; }
  std::size_t component_count() const {
    return domains.size() + (use_diff ? 1 : 0);
  }

  // Throws config_error when the combination is not runnable.
  void validate() const;

  // Canonical one-line rendering used in reports and golden files.
  std::string str() const;
};

// Parsers shared by the CLI and the tests. All throw config_error.
run_config parse_domain_list(const std::string &comma_separated);
product_kind parse_product_kind(const std::string &s);
reduction_kind parse_reduction_name(const std::string &s);
exponent_kind parse_exponent_kind(const std::string &s);
array_power_mode parse_array_power_mode(const std::string &s);
std::vector<exp_atom> parse_atoms(exponent_kind k,
                                  const std::string &semicolon_separated);

const char *domain_kind_name(num_domain_kind k);
const char *product_kind_name(product_kind k);
const char *reduction_kind_name(reduction_kind k);
const char *exponent_kind_name(exponent_kind k);
const char *array_power_mode_name(array_power_mode m);

} // namespace prodint
