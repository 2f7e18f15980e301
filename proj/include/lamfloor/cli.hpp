#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace lamfloor::cli {

/// Exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

using Cell = std::variant<std::int64_t, std::uint64_t, double, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// RFC 4180 CSV: header row then data rows, CRLF-free "\n" line ends,
/// fields quoted when they contain a comma, quote or newline. Doubles use
/// %.17g so values round-trip.
void write_csv(std::ostream& os, const Table& table);

std::string format_cell(const Cell& cell);
std::string csv_escape(const std::string& field);

/// %a hex-float rendering.
std::string hex_float(double v);

/// Round to 6 decimal places for human-facing mirrors.
double round6(double v);

/// Entry point behind the lamfloor executable. Data goes to `out` (or the
/// --output file); diagnostics, usage and timing go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lamfloor::cli
