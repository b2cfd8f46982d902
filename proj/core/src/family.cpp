#include "m3k/family.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "m3k/constructions.hpp"

namespace m3k {

namespace {

std::vector<int> parse_args(const std::string& spec, std::size_t open) {
  if (spec.back() != ')') throw std::invalid_argument("family spec missing ')': " + spec);
  std::vector<int> out;
  std::string inner = spec.substr(open + 1, spec.size() - open - 2);
  std::string token;
  for (char c : inner + ",") {
    if (c == ',') {
      if (token.empty()) throw std::invalid_argument("bad family arguments: " + spec);
      out.push_back(std::stoi(token));
      token.clear();
    } else {
      token.push_back(c);
    }
  }
  return out;
}

std::vector<std::string> theta_names(int n, bool minus) {
  std::vector<std::string> names;
  for (int i = 1; i <= (minus ? n - 1 : n); ++i) names.push_back("w" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("z" + std::to_string(i));
  return names;
}

}  // namespace

NamedMatroid parse_family(const std::string& raw) {
  std::string spec = raw;
  spec.erase(std::remove_if(spec.begin(), spec.end(),
                            [](unsigned char c) { return std::isspace(c); }),
             spec.end());
  std::string upper = spec;
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  const auto open = upper.find('(');
  const std::string head = open == std::string::npos ? upper : upper.substr(0, open);

  auto need = [&](std::size_t want) {
    const auto args = parse_args(upper, open);
    if (args.size() != want)
      throw std::invalid_argument("family " + head + " expects " + std::to_string(want) +
                                  " argument(s)");
    return args;
  };

  if (head == "U") {
    const auto args = need(2);
    return {uniform(args[0], args[1]), spec, {}};
  }
  if (head == "WHEEL") {
    const auto args = need(1);
    return {wheel(args[0]), spec, {}};
  }
  if (head == "WHIRL") {
    const auto args = need(1);
    return {whirl(args[0]), spec, {}};
  }
  if (head == "THETA") {
    const auto args = need(1);
    return {theta(args[0]).first, spec, theta_names(args[0], false)};
  }
  if (head == "THETAMINUS" || head == "THETA-") {
    const auto args = need(1);
    return {theta_minus(args[0]).first, spec, theta_names(args[0], true)};
  }
  if (head == "K") {
    const auto args = need(1);
    const int v = args[0];
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < v; ++i)
      for (int j = i + 1; j < v; ++j) edges.emplace_back(i, j);
    return {graphic_from_edges(v, edges).with_provenance("M(K" + std::to_string(v) + ")"),
            spec,
            {}};
  }
  if (head == "MK4") return {mk4(), spec, {}};
  if (head == "F7" || head == "FANO") return {fano(), spec, {}};
  if (head == "L8") return {l8(), spec, l8_names()};
  throw std::invalid_argument("unknown family: " + raw);
}

}  // namespace m3k
