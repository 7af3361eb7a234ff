#include <algorithm>
#include <ostream>
#include <string>

#include "abelian/cli.hpp"

namespace abelian::cli {

namespace {

nlohmann::ordered_json decimal_list(const std::vector<BigInt>& values) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

nlohmann::ordered_json primary_json(const CanonicalGroupKey& key) {
  auto out = nlohmann::ordered_json::object();
  for (const auto& [p, exps] : key.primary_parts) out[p.get_str()] = exps;
  return out;
}

std::string tuple(const std::vector<unsigned>& b) {
  std::string out = "(";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(b[i]);
  }
  return out + ")";
}

}  // namespace

std::string render_cyclic_chain(const CanonicalGroupKey& key) {
  const auto factors = key.invariant_factors();
  if (factors.empty()) return "C1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " x ";
    out += "C" + factors[i].get_str();
  }
  return out;
}

std::string render_primary(const CanonicalGroupKey& key) {
  if (key.is_trivial()) return "1";
  std::string out;
  for (const auto& [p, exps] : key.primary_parts) {
    for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
      if (!out.empty()) out += " x ";
      out += p.get_str() + "^" + std::to_string(*it);
    }
  }
  return out;
}

std::string render_reduced_forms(const OrbitSummary& orbit) {
  std::string out;
  for (const auto& [p, forms] : orbit.reduced_forms) {
    if (!out.empty()) out += ' ';
    out += p.get_str() + ":";
    for (std::size_t i = 0; i < forms.size(); ++i) {
      if (i) out += ',';
      out += tuple(forms[i]);
    }
  }
  return out.empty() ? "-" : out;
}

nlohmann::ordered_json key_to_json(const CanonicalGroupKey& key) {
  nlohmann::ordered_json out;
  out["invariant_factors"] = decimal_list(key.invariant_factors());
  out["order"] = key.order().get_str();
  out["primary"] = primary_json(key);
  return out;
}

nlohmann::ordered_json group_to_json(const AbelianGroup& g) {
  nlohmann::ordered_json out;
  out["moduli"] = decimal_list(g.moduli());
  out["order"] = g.order().get_str();
  out["invariant_factors"] = decimal_list(g.invariant_factors());
  out["primary"] = primary_json(g.canonical());
  return out;
}

void write_orbit_rows(std::ostream& out, const AbelianGroup& g, std::span<const OrbitRow> orbit_rows,
                      std::string_view detail_header) {
  struct Row {
    std::string index, size, order, quotient, detail;
  };
  std::vector<Row> rows;
  rows.push_back({"orbit", "size", "order", "quotient", std::string(detail_header)});
  BigInt total = 0;
  for (std::size_t i = 0; i < orbit_rows.size(); ++i) {
    const auto& o = orbit_rows[i];
    total += o.size;
    const BigInt order = g.order() / o.quotient.order();
    rows.push_back({std::to_string(i + 1), o.size.get_str(), order.get_str(), render_cyclic_chain(o.quotient),
                    o.detail});
  }

  std::size_t w_index = 0, w_size = 0, w_order = 0, w_quotient = 0;
  for (const auto& r : rows) {
    w_index = std::max(w_index, r.index.size());
    w_size = std::max(w_size, r.size.size());
    w_order = std::max(w_order, r.order.size());
    w_quotient = std::max(w_quotient, r.quotient.size());
  }
  auto right = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
  auto left = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };

  out << "group: " << format_group_spec(g) << " (order " << g.order().get_str() << ", "
      << render_cyclic_chain(g.canonical()) << ")\n";
  for (const auto& r : rows) {
    out << right(r.index, w_index) << "  " << right(r.size, w_size) << "  " << right(r.order, w_order) << "  "
        << left(r.quotient, w_quotient) << "  " << r.detail << '\n';
  }
  out << "orbits: " << orbit_rows.size() << '\n';
  out << "sum of sizes: " << total.get_str() << " (|G| = " << g.order().get_str() << ")\n";
}

void write_orbit_table(std::ostream& out, const AbelianGroup& g, std::span<const OrbitSummary> orbits) {
  std::vector<OrbitRow> rows;
  rows.reserve(orbits.size());
  for (const auto& o : orbits) rows.push_back({o.size, o.quotient_key, render_reduced_forms(o)});
  write_orbit_rows(out, g, rows, "reduced forms");
}

nlohmann::ordered_json orbits_to_json(const AbelianGroup& g, std::span<const OrbitSummary> orbits) {
  nlohmann::ordered_json out;
  out["group"] = group_to_json(g);
  auto list = nlohmann::ordered_json::array();
  BigInt total = 0;
  for (const auto& o : orbits) {
    total += o.size;
    nlohmann::ordered_json entry;
    entry["size"] = o.size.get_str();
    entry["element_order"] = BigInt(g.order() / o.quotient_key.order()).get_str();
    entry["quotient"] = key_to_json(o.quotient_key);
    auto forms = nlohmann::ordered_json::object();
    for (const auto& [p, list_p] : o.reduced_forms) forms[p.get_str()] = list_p;
    entry["reduced_forms"] = forms;
    list.push_back(std::move(entry));
  }
  out["orbits"] = std::move(list);
  out["orbit_count"] = orbits.size();
  out["total_size"] = total.get_str();
  return out;
}

}  // namespace abelian::cli
