#pragma once

// Serialization of tables, F(k) rows and sieve reports.
//
// Table CSV: header "k2,k,count", then per column k its surviving cells
// followed by the footer rows "#threshold,k,v", "#gray,k,v", "#total,k,v",
// "#F,k,decimal". JSON keeps every big integer as a decimal string.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mx1/sieve.hpp"
#include "mx1/stopping_table.hpp"

namespace mx1 {

enum class Format { Csv, Json, Markdown };

/// Throws std::invalid_argument for anything other than csv/json/markdown.
Format parse_format(std::string_view name);

struct OutputSpec {
  Format format = Format::Csv;
  unsigned precision = 8;
  std::string destination;  // empty or "-" means stdout
};

nlohmann::ordered_json table_to_json(const StoppingTable& table, unsigned precision = 8);
/// Throws std::invalid_argument on schema violations.
StoppingTable table_from_json(const nlohmann::json& doc);

void write_table(std::ostream& os, const StoppingTable& table, const OutputSpec& spec);
void write_fk(std::ostream& os, const MapParams& params, const std::vector<NChiRow>& rows,
              const OutputSpec& spec);
void write_verify(std::ostream& os, const std::vector<SieveReport>& reports,
                  const OutputSpec& spec);

/// "27328 == 27328" / "280 > 266" / "3 < 4" (brute vs table).
std::string verify_summary(const SieveReport& report);

}  // namespace mx1
