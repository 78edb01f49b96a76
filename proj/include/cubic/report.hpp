#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubic/order_enum.hpp"
#include "cubic/thue_mahler.hpp"

namespace cubic {

enum class OutputFormat { text, csv, json };

std::optional<OutputFormat> format_from_name(const std::string& s);

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  // shown by the text and json renderers; csv stays purely tabular
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<Table> tables;
};

// Deterministic, locale-free rendering with LF line endings.
std::string render(const Report& r, OutputFormat f);

Report count_report(const PrimeContext& ctx,
                    const std::vector<CountReport>& rows);
Report enumerate_report(const PrimeContext& ctx, int n,
                        const std::vector<OrderTriple>& triples);
Report monogenic_report(const PrimeContext& ctx, const CensusResult& census,
                        long search_bound);
Report thue_report(const PrimeContext& ctx,
                   const std::vector<PrimitiveSolution>& solutions);

}  // namespace cubic
