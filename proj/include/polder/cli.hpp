#pragma once
/**
 * cli.hpp - Command-line front end: flag parsing, computation dispatch,
 * distance scans, crossover finding, and deterministic table emission.
 *
 * Exit codes: 0 success, 2 configuration error, 3 numerical failure.
 * Numbers are printed with 17 significant digits so identical configs yield
 * byte-identical output.
 */

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace polder {

// ============================================================================
// Result tables
// ============================================================================

// A fully formatted output table: metadata key/value pairs (emitted as
// '#'-prefixed comment lines in CSV), a header, and string cells. Cells are
// preformatted so CSV and JSON emission are byte-deterministic.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;

    // Throws if the cell count does not match the header.
    void add_row(std::vector<std::string> cells);
};

void emit_csv(const ResultTable& table, std::ostream& out);
void emit_json(const ResultTable& table, std::ostream& out);

// ============================================================================
// Formatting and hashing
// ============================================================================

// Fixed 17-significant-digit representation used for every emitted number.
std::string format_number(double value);

// FNV-1a 64-bit hash of a canonical config string; the hex digest is emitted
// in the metadata block and changes exactly when a semantic field changes.
std::uint64_t fnv1a64(const std::string& text);

// ============================================================================
// Entry point
// ============================================================================

// args excludes the program name. Tables go to `out` (or to --output files);
// diagnostics go to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace polder
