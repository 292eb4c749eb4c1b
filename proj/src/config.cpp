#include "prodint/config.hpp"

#include <algorithm>
#include <sstream>

namespace prodint {

namespace {

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string &s) {
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos)
    return "";
  return s.substr(b, e - b + 1);
}

} // namespace

const char *domain_kind_name(num_domain_kind k) {
  switch (k) {
  case num_domain_kind::interval:
    return "interval";
  case num_domain_kind::parity:
    return "parity";
  case num_domain_kind::sign:
    return "sign";
  case num_domain_kind::congruence:
    return "congruence";
  case num_domain_kind::boolean:
    return "bool";
  }
  return "?";
}

const char *product_kind_name(product_kind k) {
  switch (k) {
  case product_kind::none:
    return "none";
  case product_kind::cartesian:
    return "cartesian";
  case product_kind::reduced:
    return "reduced";
  case product_kind::granger:
    return "granger";
  case product_kind::power:
    return "power";
  }
  return "?";
}

const char *reduction_kind_name(reduction_kind k) {
  switch (k) {
  case reduction_kind::interval_parity:
    return "interval-parity";
  case reduction_kind::interval_congruence:
    return "interval-congruence";
  case reduction_kind::intervals_to_diff:
    return "intervals-to-diff";
  }
  return "?";
}

const char *exponent_kind_name(exponent_kind k) {
  switch (k) {
  case exponent_kind::parity:
    return "parity";
  case exponent_kind::boolean:
    return "bool";
  case exponent_kind::interval_atoms:
    return "interval-atoms";
  }
  return "?";
}

const char *array_power_mode_name(array_power_mode m) {
  switch (m) {
  case array_power_mode::off:
    return "off";
  case array_power_mode::value_parity:
    return "value-parity";
  case array_power_mode::index_parity:
    return "index-parity";
  }
  return "?";
}

std::string exp_atom_str(const exp_atom &a) {
  return std::visit([](const auto &v) { return v.str(); }, a);
}

bool exp_atoms_disjoint(const exp_atom &a, const exp_atom &b) {
  if (a.index() != b.index())
    return false; // mixing exponent domains is a config error anyway
  return std::visit(
      [&](const auto &x) {
        const auto &y = std::get<std::decay_t<decltype(x)>>(b);
        return x.meet(y).is_bottom();
      },
      a);
}

run_config parse_domain_list(const std::string &comma_separated) {
  run_config cfg;
  for (const std::string &raw : split(comma_separated, ',')) {
    const std::string name = trim(raw);
    if (name.empty())
      continue;
    if (name == "interval")
      cfg.domains.insert(num_domain_kind::interval);
    else if (name == "parity")
      cfg.domains.insert(num_domain_kind::parity);
    else if (name == "sign")
      cfg.domains.insert(num_domain_kind::sign);
    else if (name == "congruence")
      cfg.domains.insert(num_domain_kind::congruence);
    else if (name == "bool")
      cfg.domains.insert(num_domain_kind::boolean);
    else if (name == "diff")
      cfg.use_diff = true;
    else
      throw config_error("unknown domain: " + name);
  }
  return cfg;
}

product_kind parse_product_kind(const std::string &s) {
  if (s == "none")
    return product_kind::none;
  if (s == "cartesian")
    return product_kind::cartesian;
  if (s == "reduced")
    return product_kind::reduced;
  if (s == "granger")
    return product_kind::granger;
  if (s == "power")
    return product_kind::power;
  throw config_error("unknown product: " + s);
}

reduction_kind parse_reduction_name(const std::string &s) {
  if (s == "interval-parity")
    return reduction_kind::interval_parity;
  if (s == "interval-congruence")
    return reduction_kind::interval_congruence;
  if (s == "intervals-to-diff")
    return reduction_kind::intervals_to_diff;
  throw config_error("unknown reduction: " + s);
}

exponent_kind parse_exponent_kind(const std::string &s) {
  if (s == "parity")
    return exponent_kind::parity;
  if (s == "bool")
    return exponent_kind::boolean;
  if (s == "interval-atoms")
    return exponent_kind::interval_atoms;
  throw config_error("unknown exponent kind: " + s);
}

array_power_mode parse_array_power_mode(const std::string &s) {
  if (s == "off")
    return array_power_mode::off;
  if (s == "value-parity")
    return array_power_mode::value_parity;
  if (s == "index-parity")
    return array_power_mode::index_parity;
  throw config_error("unknown array power mode: " + s);
}

namespace {

// Interval atom literal: "[3,+inf)", "(-inf,2]", "[0,5]". Open finite ends
// tighten by one (integer semantics).
interval parse_interval_atom(const std::string &s) {
  if (s.size() < 3)
    throw config_error("malformed interval atom: " + s);
  const char open = s.front(), close = s.back();
  if ((open != '[' && open != '(') || (close != ']' && close != ')'))
    throw config_error("malformed interval atom: " + s);
  const std::string body = s.substr(1, s.size() - 2);
  const auto parts = split(body, ',');
  if (parts.size() != 2)
    throw config_error("malformed interval atom: " + s);
  const std::string lo_s = trim(parts[0]), hi_s = trim(parts[1]);

  ext_int lo, hi;
  if (lo_s == "-inf" || lo_s == "-oo")
    lo = ext_int::minus_inf();
  else
    lo = ext_int(std::stoll(lo_s) + (open == '(' ? 1 : 0));
  if (hi_s == "+inf" || hi_s == "inf" || hi_s == "+oo")
    hi = ext_int::plus_inf();
  else
    hi = ext_int(std::stoll(hi_s) - (close == ')' ? 1 : 0));
  if (!lo.is_finite() && open == '(' && lo_s != "-inf" && lo_s != "-oo")
    throw config_error("malformed interval atom: " + s);
  const interval iv = interval::make(lo, hi);
  if (iv.is_bottom())
    throw config_error("empty interval atom: " + s);
  return iv;
}

} // namespace

std::vector<exp_atom> parse_atoms(exponent_kind k,
                                  const std::string &semicolon_separated) {
  std::vector<exp_atom> out;
  for (const std::string &raw : split(semicolon_separated, ';')) {
    const std::string s = trim(raw);
    if (s.empty())
      continue;
    switch (k) {
    case exponent_kind::parity:
      if (s == "odd" || s == "o")
        out.emplace_back(parity::odd());
      else if (s == "even" || s == "e")
        out.emplace_back(parity::even());
      else
        throw config_error("parity atom must be odd or even: " + s);
      break;
    case exponent_kind::boolean:
      if (s == "true" || s == "tt")
        out.emplace_back(bool_abs::tt());
      else if (s == "false" || s == "ff")
        out.emplace_back(bool_abs::ff());
      else
        throw config_error("bool atom must be true or false: " + s);
      break;
    case exponent_kind::interval_atoms:
      out.emplace_back(parse_interval_atom(s));
      break;
    }
  }
  return out;
}

void run_config::validate() const {
  if (widening_delay < 0)
    throw config_error("widening delay must be >= 0");
  if (visit_cap < 1)
    throw config_error("visit cap must be >= 1");
  if (component_count() == 0)
    throw config_error("no domains selected");

  auto require = [&](num_domain_kind k, const char *why) {
    if (!has(k))
      throw config_error(std::string("configuration requires the ") +
                         domain_kind_name(k) + " domain (" + why + ")");
  };

  for (reduction_kind r : reductions) {
    switch (r) {
    case reduction_kind::interval_parity:
      require(num_domain_kind::interval, "interval-parity reduction");
      require(num_domain_kind::parity, "interval-parity reduction");
      break;
    case reduction_kind::interval_congruence:
      require(num_domain_kind::interval, "interval-congruence reduction");
      require(num_domain_kind::congruence, "interval-congruence reduction");
      break;
    case reduction_kind::intervals_to_diff:
      require(num_domain_kind::interval, "intervals-to-diff reduction");
      if (!use_diff)
        throw config_error(
            "intervals-to-diff reduction requires the diff domain");
      break;
    }
  }

  switch (product) {
  case product_kind::none:
    if (component_count() > 1)
      throw config_error("multiple domains require a product");
    if (!reductions.empty())
      throw config_error("reductions require a reduced or granger product");
    break;
  case product_kind::cartesian:
    if (component_count() < 2)
      throw config_error("cartesian product needs at least two domains");
    if (!reductions.empty())
      throw config_error("cartesian product does not reduce; "
                         "use --product reduced");
    break;
  case product_kind::reduced:
  case product_kind::granger:
    if (component_count() < 2)
      throw config_error("reduced product needs at least two domains");
    if (reductions.empty())
      throw config_error("reduced product needs at least one reduction rule");
    break;
  case product_kind::power: {
    if (power_pivot.empty())
      throw config_error("power product needs --power-pivot");
    if (power_atoms.empty())
      throw config_error("power product needs a finite, non-empty atom list");
    if (component_count() < 1)
      throw config_error("power product needs base domains");
    if (array_power != array_power_mode::off)
      throw config_error("array power mode cannot be combined with a pivot "
                         "power product");
    for (std::size_t i = 0; i < power_atoms.size(); ++i)
      for (std::size_t j = i + 1; j < power_atoms.size(); ++j)
        if (!exp_atoms_disjoint(power_atoms[i], power_atoms[j]))
          throw config_error("power atoms overlap: " +
                             exp_atom_str(power_atoms[i]) + " and " +
                             exp_atom_str(power_atoms[j]));
    const bool kinds_match =
        std::all_of(power_atoms.begin(), power_atoms.end(),
                    [&](const exp_atom &a) {
                      switch (power_exponent) {
                      case exponent_kind::parity:
                        return std::holds_alternative<parity>(a);
                      case exponent_kind::boolean:
                        return std::holds_alternative<bool_abs>(a);
                      case exponent_kind::interval_atoms:
                        return std::holds_alternative<interval>(a);
                      }
                      return false;
                    });
    if (!kinds_match)
      throw config_error("power atoms do not match the exponent kind");
    if (power_exponent == exponent_kind::interval_atoms)
      require(num_domain_kind::interval, "interval exponent atoms");
    break;
  }
  }

  if (array_power != array_power_mode::off) {
    require(num_domain_kind::interval, "array cell contents");
    require(num_domain_kind::parity, "array cell selection");
  }

  if (format != "text" && format != "json")
    throw config_error("format must be text or json");
}

std::string run_config::str() const {
  std::ostringstream os;
  os << "domains=";
  bool first = true;
  for (num_domain_kind k : domains) {
    if (!first)
      os << ",";
    first = false;
    os << domain_kind_name(k);
  }
  if (use_diff) {
    if (!first)
      os << ",";
    os << "diff";
    first = false;
  }
  os << " product=" << product_kind_name(product);
  if (!reductions.empty()) {
    os << " reductions=";
    for (std::size_t i = 0; i < reductions.size(); ++i) {
      if (i)
        os << ",";
      os << reduction_kind_name(reductions[i]);
    }
  }
  if (product == product_kind::power) {
    os << " pivot=" << power_pivot
       << " exponent=" << exponent_kind_name(power_exponent) << " atoms=";
    for (std::size_t i = 0; i < power_atoms.size(); ++i) {
      if (i)
        os << ";";
      os << exp_atom_str(power_atoms[i]);
    }
  }
  if (array_power != array_power_mode::off)
    os << " array-power=" << array_power_mode_name(array_power);
  os << " widening-delay=" << widening_delay;
  return os.str();
}

} // namespace prodint
