#include "fcaffine/golden.hpp"

#include <stdexcept>

#include "json.hpp"

namespace fcaffine {

namespace {

struct Row {
  int n;
  int max_degree;
  int onset;
  std::vector<long long> coeffs;
};

const std::vector<Row>& rows() {
  static const std::vector<Row> table = {
    {3, 4, 2,
     {1, 3, 6, 6, 6}},
    {4, 6, 3,
     {1, 4, 10, 16, 18, 16, 18}},
    {5, 9, 5,
     {1, 5, 15, 30, 45, 50, 50, 50, 50, 50}},
    {6, 15, 7,
     {1, 6, 21, 50, 90, 126, 146, 150, 156, 152, 156, 150, 158, 150, 156, 152}},
    {7, 15, 10,
     {1, 7, 28, 77, 161, 266, 364, 427, 462, 483, 490, 490, 490, 490, 490, 490}},
    {8, 20, 13,
     {1, 8, 36, 112, 266, 504, 792, 1064, 1274, 1416, 1520, 1568, 1602, 1600, 1616, 1600, 1618,
      1600, 1616, 1600, 1618}},
    {9, 23, 17,
     {1, 9, 45, 156, 414, 882, 1563, 2367, 3159, 3831, 4365, 4770, 5046, 5220, 5319, 5370, 5391,
      5400, 5406, 5400, 5400, 5406, 5400, 5400}},
    {10, 35, 21,
     {1, 10, 55, 210, 615, 1452, 2860, 4820, 7125, 9470, 11622, 13470, 15000, 16160, 17030, 17602,
      18010, 18210, 18380, 18410, 18482, 18450, 18500, 18450, 18500, 18452, 18500, 18450, 18500,
      18450, 18502, 18450, 18500, 18450, 18500, 18452}},
    {11, 29, 26,
     {1, 11, 66, 275, 880, 2277, 4928, 9141, 14850, 21571, 28633, 35453, 41690, 47135, 51667, 55297,
      58091, 60159, 61622, 62623, 63272, 63668, 63910, 64031, 64086, 64119, 64130, 64130, 64130,
      64130}},
    {12, 50, 31,
     {1, 12, 78, 352, 1221, 3432, 8086, 16356, 28974, 45772, 65670, 87120, 108690, 129288, 148170,
      164776, 178980, 190680, 200148, 207444, 213084, 217096, 220098, 222012, 223458, 224172,
      224814, 224992, 225276, 225216, 225408, 225264, 225420, 225280, 225414, 225264, 225438,
      225264, 225414, 225280, 225420, 225264, 225432, 225264, 225420, 225280, 225414, 225264,
      225438, 225264, 225414}},
  };
  return table;
}

}  // namespace

const std::vector<GoldenSeries>& golden_tables() {
  static const std::vector<GoldenSeries> tables = [] {
    std::vector<GoldenSeries> out;
    for (const Row& r : rows()) {
      GoldenSeries g{r.n, r.max_degree, r.onset, {}};
      for (long long c : r.coeffs) g.coeffs.emplace_back(c);
      out.push_back(std::move(g));
    }
    return out;
  }();
  return tables;
}

std::uint64_t golden_checksum(std::span<const GoldenSeries> tables) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  const auto feed = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 0x100000001b3ull;
    }
  };
  for (const auto& t : tables) {
    feed(std::to_string(t.n) + ":" + std::to_string(t.max_degree) + ":" + std::to_string(t.onset) + ":");
    for (std::size_t i = 0; i < t.coeffs.size(); ++i) feed((i ? "," : "") + t.coeffs[i].str());
    feed(";");
  }
  return h;
}

std::string GoldenMismatch::to_string() const {
  return "n=" + std::to_string(n) + " degree=" + std::to_string(degree) + " expected=" + expected.str() +
         " got=" + got.str();
}

std::optional<GoldenMismatch> first_mismatch(const GoldenSeries& table, const QPoly& computed) {
  for (int d = 0; d < static_cast<int>(table.coeffs.size()); ++d) {
    const BigInt got = computed.coeff(d);
    if (got != table.coeffs[d]) return GoldenMismatch{table.n, d, table.coeffs[d], got};
  }
  return std::nullopt;
}

std::string golden_json(std::span<const GoldenSeries> tables) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& t : tables) {
    nlohmann::ordered_json j;
    j["n"] = t.n;
    j["max_degree"] = t.max_degree;
    j["onset"] = t.onset;
    j["coeffs"] = nlohmann::ordered_json::array();
    for (const auto& c : t.coeffs) j["coeffs"].push_back(c.str());
    list.push_back(std::move(j));
  }
  nlohmann::ordered_json root;
  root["tables"] = std::move(list);
  return root.dump(2);
}

std::vector<GoldenSeries> parse_golden_json(std::string_view text) {
  std::vector<GoldenSeries> out;
  try {
    const auto root = nlohmann::json::parse(text);
    for (const auto& j : root.at("tables")) {
      GoldenSeries g{j.at("n").get<int>(), j.at("max_degree").get<int>(), j.at("onset").get<int>(), {}};
      for (const auto& c : j.at("coeffs")) g.coeffs.emplace_back(c.get<std::string>());
      if (static_cast<int>(g.coeffs.size()) != g.max_degree + 1)
        throw std::invalid_argument("coefficient count does not match max_degree");
      out.push_back(std::move(g));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("golden table: ") + e.what());
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument(std::string("golden table: ") + e.what());
  }
  return out;
}

}  // namespace fcaffine
