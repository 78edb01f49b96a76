#include "cubic/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace cubic {

namespace {

std::vector<std::pair<std::string, std::string>> field_meta(
    const PrimeContext& ctx) {
  std::vector<std::pair<std::string, std::string>> meta;
  meta.emplace_back("m", std::to_string(ctx.field.m));
  meta.emplace_back("h", std::to_string(ctx.field.h));
  meta.emplace_back("k", std::to_string(ctx.field.k));
  meta.emplace_back("p", std::to_string(ctx.p));
  meta.emplace_back("basis", "{1, X, Y} with X = cbrt(m), Y = X^2/k");
  if (ctx.field.m < 0)
    meta.emplace_back("note", "m < 0; the sign of m is carried by h");
  return meta;
}

std::string sign_str(int sign) { return sign < 0 ? "-1" : "+1"; }

std::string render_csv(const Report& r) {
  std::string out;
  bool first = true;
  for (const Table& t : r.tables) {
    if (!first) out += "\n";
    first = false;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      if (c) out += ",";
      out += t.columns[c];
    }
    out += "\n";
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out += ",";
        out += row[c];
      }
      out += "\n";
    }
  }
  return out;
}

std::string render_json(const Report& r) {
  nlohmann::ordered_json j;
  j["format"] = 1;
  for (const auto& [key, value] : r.meta) j[key] = value;
  nlohmann::ordered_json tables = nlohmann::ordered_json::object();
  for (const Table& t : r.tables) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t c = 0; c < t.columns.size(); ++c)
        obj[t.columns[c]] = row[c];
      rows.push_back(std::move(obj));
    }
    tables[t.name] = std::move(rows);
  }
  j["tables"] = std::move(tables);
  return j.dump(2) + "\n";
}

std::string render_text(const Report& r) {
  std::string out;
  for (const auto& [key, value] : r.meta) out += key + ": " + value + "\n";
  for (const Table& t : r.tables) {
    if (!out.empty()) out += "\n";
    out += "[" + t.name + "]\n";
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c)
      width[c] = t.columns[c].size();
    for (const auto& row : t.rows)
      for (std::size_t c = 0; c < row.size(); ++c)
        width[c] = std::max(width[c], row[c].size());
    auto emit_row = [&](const std::vector<std::string>& row) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out += "  ";
        out += row[c];
        if (c + 1 < row.size())
          out.append(width[c] - row[c].size(), ' ');
      }
      out += "\n";
    };
    emit_row(t.columns);
    for (const auto& row : t.rows) emit_row(row);
  }
  return out;
}

}  // namespace

std::optional<OutputFormat> format_from_name(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  return std::nullopt;
}

std::string render(const Report& r, OutputFormat f) {
  switch (f) {
    case OutputFormat::csv: return render_csv(r);
    case OutputFormat::json: return render_json(r);
    case OutputFormat::text: return render_text(r);
  }
  return {};
}

Report count_report(const PrimeContext& ctx,
                    const std::vector<CountReport>& rows) {
  Report r;
  r.meta = field_meta(ctx);
  bool scanned = !rows.empty() && rows.front().by_scan.has_value();
  Table t;
  t.name = "counts";
  t.columns = {"n", "count_formula"};
  if (scanned) t.columns.push_back("count_scan");
  t.columns.push_back("cumulative_A");
  for (const CountReport& row : rows) {
    std::vector<std::string> cells{std::to_string(row.n),
                                   row.by_formula.get_str()};
    if (scanned) cells.push_back(row.by_scan->get_str());
    cells.push_back(row.cumulative_a.get_str());
    t.rows.push_back(std::move(cells));
  }
  r.tables.push_back(std::move(t));
  return r;
}

Report enumerate_report(const PrimeContext& ctx, int n,
                        const std::vector<OrderTriple>& triples) {
  Report r;
  r.meta = field_meta(ctx);
  r.meta.emplace_back("n", std::to_string(n));
  Table t;
  t.name = "orders";
  t.columns = {"n",       "i",       "j",       "beta",
               "A_coeff", "B_coeff", "C_coeff", "D_coeff"};
  for (const OrderTriple& triple : triples) {
    BinaryCubicForm form = index_form_order(triple);
    t.rows.push_back({std::to_string(triple.n()), std::to_string(triple.i),
                      std::to_string(triple.j), triple.beta.get_str(),
                      form.a.get_str(), form.b.get_str(), form.c.get_str(),
                      form.d.get_str()});
  }
  r.tables.push_back(std::move(t));
  return r;
}

Report monogenic_report(const PrimeContext& ctx, const CensusResult& census,
                        long search_bound) {
  Report r;
  r.meta = field_meta(ctx);
  r.meta.emplace_back("search_bound", std::to_string(search_bound));
  r.meta.emplace_back("g_found",
                      std::to_string(census.solutions_found.size()));
  r.meta.emplace_back("max_linked_N",
                      std::to_string(census.max_linked_n_exp));

  Table c;
  c.name = "census";
  c.columns = {"n",            "count_orders", "count_monogenic_found",
               "cumulative_A", "cumulative_B", "ratio"};
  for (const CensusEntry& row : census.rows)
    c.rows.push_back({std::to_string(row.n), row.orders_count.get_str(),
                      std::to_string(row.monogenic.size()),
                      row.cumulative_a.get_str(), row.cumulative_b.get_str(),
                      row.cumulative_b.get_str() + "/" +
                          row.cumulative_a.get_str()});
  r.tables.push_back(std::move(c));

  Table links;
  links.name = "linked_solutions";
  links.columns = {"n", "i",         "j",         "beta", "witness_x",
                   "witness_y", "U", "V", "N",    "sign"};
  for (const CensusEntry& row : census.rows)
    for (std::size_t idx = 0; idx < row.monogenic.size(); ++idx) {
      const auto& [t, witness] = row.monogenic[idx];
      const PrimitiveSolution& sol = row.links[idx];
      links.rows.push_back(
          {std::to_string(row.n), std::to_string(t.i), std::to_string(t.j),
           t.beta.get_str(), std::to_string(witness.first),
           std::to_string(witness.second), sol.u.get_str(), sol.v.get_str(),
           std::to_string(sol.n_exp), sign_str(sol.sign)});
    }
  r.tables.push_back(std::move(links));
  return r;
}

Report thue_report(const PrimeContext& ctx,
                   const std::vector<PrimitiveSolution>& solutions) {
  Report r;
  r.meta = field_meta(ctx);
  Table t;
  t.name = "primitive_solutions";
  t.columns = {"U", "V", "N", "sign", "case", "a", "b"};
  for (const PrimitiveSolution& s : solutions) {
    SolutionClass cls = classify_solution(s, ctx);
    t.rows.push_back({s.u.get_str(), s.v.get_str(), std::to_string(s.n_exp),
                      sign_str(s.sign), case_name(cls.kase),
                      cls.a ? std::to_string(*cls.a) : "",
                      cls.b ? std::to_string(*cls.b) : ""});
  }
  r.tables.push_back(std::move(t));
  return r;
}

}  // namespace cubic
