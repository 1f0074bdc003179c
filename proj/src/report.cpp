#include "plancherel/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "plancherel/errors.hpp"
#include "plancherel/group_spec.hpp"
#include "plancherel/probe.hpp"

namespace plancherel {

GroupPtr parse_group_spec(std::string_view spec) { return make_named_group(spec); }

std::vector<GroupFunction> random_test_functions(const GroupPtr& group, std::size_t count,
                                                 std::uint64_t seed) {
  std::vector<GroupFunction> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_group_function(group, seed, i));
  return out;
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

std::string format_complex(cplx z) {
  const std::string re = format_real(z.real());
  std::string im = format_real(z.imag());
  if (im.front() == '-') return re + "-" + im.substr(1) + "i";
  return re + "+" + im + "i";
}

cplx parse_complex(std::string_view text) {
  const std::string s(text);
  if (s.size() < 2 || s.back() != 'i') throw Error(ErrorKind::InvalidConfig, "not a complex literal: " + s);
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size() - 1; i > 0; --i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) throw Error(ErrorKind::InvalidConfig, "not a complex literal: " + s);
  const double re = std::strtod(s.substr(0, split).c_str(), nullptr);
  const double im = std::strtod(s.substr(split, s.size() - split - 1).c_str(), nullptr);
  return {re, im};
}

nlohmann::json json_number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(format_real(x).c_str(), nullptr);
}

std::string table_csv(const CharacterTable& table) {
  std::string out = "degree";
  for (std::size_t c = 0; c < table.num_classes(); ++c) out += ",class_" + std::to_string(c);
  out += "\n";
  for (std::size_t pi = 0; pi < table.num_irreps(); ++pi) {
    out += std::to_string(table.degrees()[pi]);
    for (std::size_t c = 0; c < table.num_classes(); ++c) out += "," + format_complex(table.value(pi, c));
    out += "\n";
  }
  return out;
}

nlohmann::json table_json(const CharacterTable& table) {
  const FiniteGroup& g = *table.group();
  nlohmann::json j;
  j["degrees"] = table.degrees();
  auto weights = nlohmann::json::array();
  for (double w : table.plancherel_weights()) weights.push_back(json_number(w));
  j["plancherel_weights"] = weights;
  auto sizes = nlohmann::json::array();
  auto reps = nlohmann::json::array();
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    sizes.push_back(g.class_size(c));
    reps.push_back(g.class_representative(c));
  }
  j["class_sizes"] = sizes;
  j["class_representatives"] = reps;
  auto rows = nlohmann::json::array();
  for (std::size_t pi = 0; pi < table.num_irreps(); ++pi) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < table.num_classes(); ++c) row.push_back(format_complex(table.value(pi, c)));
    rows.push_back(row);
  }
  j["values"] = rows;
  return j;
}

std::string digest_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace plancherel
