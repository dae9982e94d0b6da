#pragma once

// Field snapshots on disk. Schema: header `z,n,re,im,intensity`, UTF-8,
// LF line endings, values printed with up to 17 significant digits so a
// write/read round trip is bit-exact. Rows are ordered z-major, guide
// index ascending within each z. Writes go to a sibling temp file and are
// renamed into place, so a failed run leaves no partial output.

#include "dilat/core.hpp"
#include "dilat/errors.hpp"

#include <string>
#include <vector>

namespace dilat {

struct CsvRow {
    double z = 0.0;
    int n = 0;
    cplx u;
    double intensity = 0.0;
};

std::vector<CsvRow> rows_from_fields(const std::vector<FieldState>& fields);

void write_field_csv(const std::string& path, const std::vector<FieldState>& fields);
void write_rows_csv(const std::string& path, const std::vector<CsvRow>& rows);

// Throws CsvParseError (with 1-based line number) on malformed content,
// IoError when the file cannot be opened.
std::vector<CsvRow> read_field_csv(const std::string& path);

// Atomic text-file write (temp + rename); shared by CSV/JSON/SVG emitters.
void write_text_atomic(const std::string& path, const std::string& content);

} // namespace dilat
