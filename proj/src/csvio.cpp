#include "dilat/csvio.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace dilat {

namespace {

const char kHeader[] = "z,n,re,im,intensity";

std::string format_row(const CsvRow& row) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%.17g,%d,%.17g,%.17g,%.17g", row.z, row.n,
                  row.u.real(), row.u.imag(), row.intensity);
    return buf;
}

} // namespace

std::vector<CsvRow> rows_from_fields(const std::vector<FieldState>& fields) {
    std::vector<CsvRow> rows;
    for (const auto& f : fields) {
        for (int n = -f.window; n <= f.window; ++n) {
            const cplx u = f.at(n);
            rows.push_back({f.z, n, u, std::norm(u)});
        }
    }
    return rows;
}

void write_text_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + tmp + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::remove(tmp.c_str());
            throw IoError("write failed for '" + tmp + "'");
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IoError("cannot rename '" + tmp + "' to '" + path + "'");
    }
}

void write_rows_csv(const std::string& path, const std::vector<CsvRow>& rows) {
    std::string content = kHeader;
    content += '\n';
    for (const auto& row : rows) {
        content += format_row(row);
        content += '\n';
    }
    write_text_atomic(path, content);
}

void write_field_csv(const std::string& path, const std::vector<FieldState>& fields) {
    write_rows_csv(path, rows_from_fields(fields));
}

std::vector<CsvRow> read_field_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");

    std::vector<CsvRow> rows;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1) {
            if (line != kHeader)
                throw CsvParseError("line 1: expected header '" + std::string(kHeader) + "'",
                                    1);
            continue;
        }
        if (line.empty())
            throw CsvParseError("line " + std::to_string(line_no) + ": empty row", line_no);
        CsvRow row;
        double re = 0.0, im = 0.0;
        int consumed = 0;
        const int got = std::sscanf(line.c_str(), "%lf,%d,%lf,%lf,%lf%n", &row.z, &row.n, &re,
                                    &im, &row.intensity, &consumed);
        if (got != 5 || consumed != static_cast<int>(line.size()))
            throw CsvParseError(
                "line " + std::to_string(line_no) + ": expected 'z,n,re,im,intensity' fields",
                line_no);
        if (!std::isfinite(row.z) || !std::isfinite(re) || !std::isfinite(im) ||
            !std::isfinite(row.intensity))
            throw CsvParseError("line " + std::to_string(line_no) + ": non-finite value",
                                line_no);
        row.u = cplx(re, im);
        rows.push_back(row);
    }
    if (line_no == 0) throw CsvParseError("empty file: missing header", 1);
    return rows;
}

} // namespace dilat
