#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "dilat/csvio.hpp"
#include "dilat/errors.hpp"
#include "dilat/exact.hpp"
#include "dilat/svgplot.hpp"

using namespace dilat;

namespace {

std::string temp_path(const std::string& name) {
    return std::string("/tmp/dilat_io_") + std::to_string(::getpid()) + "_" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
}

struct FileGuard {
    std::string path;
    ~FileGuard() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("rows enumerate fields z-major with guides ascending") {
    const LatticeParams p{1.0, 0.3};
    const std::vector<FieldState> fields = {exact_field(p, 0, 0.0, 2),
                                            exact_field(p, 0, 1.5, 2)};
    const auto rows = rows_from_fields(fields);
    REQUIRE(rows.size() == 10);
    CHECK(rows[0].z == 0.0);
    CHECK(rows[0].n == -2);
    CHECK(rows[4].n == 2);
    CHECK(rows[5].z == 1.5);
    CHECK(rows[5].n == -2);
    for (const auto& r : rows) CHECK(r.intensity == std::norm(r.u));
}

TEST_CASE("csv write and read round-trip is bit exact") {
    const LatticeParams p{1.0, 0.3};
    const std::vector<FieldState> fields = {exact_field(p, 1, 0.0, 3),
                                            exact_field(p, 1, 12.25, 3)};
    const std::string path = temp_path("roundtrip.csv");
    FileGuard guard{path};
    write_field_csv(path, fields);

    const auto rows = read_field_csv(path);
    const auto want = rows_from_fields(fields);
    REQUIRE(rows.size() == want.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].z == want[i].z);
        CHECK(rows[i].n == want[i].n);
        CHECK(rows[i].u == want[i].u);
        CHECK(rows[i].intensity == want[i].intensity);
    }
}

TEST_CASE("csv output uses the pinned header and LF endings") {
    const LatticeParams p{1.0, 0.3};
    const std::string path = temp_path("format.csv");
    FileGuard guard{path};
    write_field_csv(path, {exact_field(p, 0, 0.0, 1)});
    const std::string text = slurp(path);
    CHECK(text.rfind("z,n,re,im,intensity\n", 0) == 0);
    CHECK(text.find('\r') == std::string::npos);
    CHECK(text.back() == '\n');
}

TEST_CASE("atomic writes leave no temporary behind") {
    const std::string path = temp_path("atomic.txt");
    FileGuard guard{path};
    write_text_atomic(path, "payload\n");
    CHECK(slurp(path) == "payload\n");
    std::ifstream tmp(path + ".tmp");
    CHECK_FALSE(tmp.good());

    CHECK_THROWS_AS(write_text_atomic("/nonexistent_dir_zz/x.txt", "y"), IoError);
}

TEST_CASE("missing file raises an io error, not a parse error") {
    CHECK_THROWS_AS(read_field_csv(temp_path("never_written.csv")), IoError);
}

TEST_CASE("malformed content names the offending line") {
    const std::string path = temp_path("bad.csv");
    FileGuard guard{path};

    spit(path, "zz,n,re,im,intensity\n");
    CHECK_THROWS_AS(read_field_csv(path), CsvParseError);
    try {
        read_field_csv(path);
    } catch (const CsvParseError& e) {
        CHECK(e.line() == 1);
    }

    spit(path, "z,n,re,im,intensity\n0,0,1,0,1\nnot a row\n");
    try {
        read_field_csv(path);
        CHECK(false);
    } catch (const CsvParseError& e) {
        CHECK(e.line() == 3);
    }

    spit(path, "z,n,re,im,intensity\n0,0,1,0\n");
    CHECK_THROWS_AS(read_field_csv(path), CsvParseError);

    spit(path, "z,n,re,im,intensity\n0,0,1,0,1,9\n");
    CHECK_THROWS_AS(read_field_csv(path), CsvParseError);

    spit(path, "z,n,re,im,intensity\n0,0,nan,0,1\n");
    CHECK_THROWS_AS(read_field_csv(path), CsvParseError);

    spit(path, "z,n,re,im,intensity\n\n0,0,1,0,1\n");
    try {
        read_field_csv(path);
        CHECK(false);
    } catch (const CsvParseError& e) {
        CHECK(e.line() == 2);
    }

    spit(path, "");
    try {
        read_field_csv(path);
        CHECK(false);
    } catch (const CsvParseError& e) {
        CHECK(e.line() == 1);
    }
}

TEST_CASE("reader tolerates a missing trailing newline") {
    const std::string path = temp_path("notrail.csv");
    FileGuard guard{path};
    spit(path, "z,n,re,im,intensity\n0,0,1,0,1");
    const auto rows = read_field_csv(path);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].u == cplx(1.0, 0.0));
}

TEST_CASE("svg rendering emits a standalone deterministic document") {
    PlotSeries solid;
    solid.label = "n=0 <ref>";
    for (int i = 0; i <= 10; ++i) solid.points.emplace_back(0.1 * i, std::cos(0.1 * i) + 1.0);
    PlotSeries dashed;
    dashed.label = "n=1";
    dashed.dashed = true;
    for (int i = 0; i <= 10; ++i) dashed.points.emplace_back(0.1 * i, 0.5 * i);

    PlotOptions opts;
    opts.title = "traces & checks";
    const std::string svg = render_line_svg({solid, dashed}, opts);
    CHECK(svg == render_line_svg({solid, dashed}, opts));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
    CHECK(svg.find("n=0 &lt;ref&gt;") != std::string::npos);
    CHECK(svg.find("traces &amp; checks") != std::string::npos);
    CHECK(svg.find("intensity") != std::string::npos);

    // Two polylines, one per series.
    std::size_t count = 0;
    for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
         pos = svg.find("<polyline", pos + 1))
        ++count;
    CHECK(count == 2);
}

TEST_CASE("svg rendering rejects degenerate input") {
    CHECK_THROWS_AS(render_line_svg({}, PlotOptions{}), std::invalid_argument);

    PlotSeries s;
    s.label = "bad";
    s.points.emplace_back(0.0, std::nan(""));
    CHECK_THROWS_AS(render_line_svg({s}, PlotOptions{}), std::invalid_argument);

    PlotSeries ok;
    ok.label = "ok";
    ok.points.emplace_back(0.0, 1.0);
    PlotOptions tiny;
    tiny.width = 10;
    tiny.height = 10;
    CHECK_THROWS_AS(render_line_svg({ok}, tiny), std::invalid_argument);
}
