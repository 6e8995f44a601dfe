#include <doctest.h>

#include <limits>
#include <sstream>
#include <vector>

#include "dadc/csv.hpp"
#include "dadc/dataset.hpp"
#include "dadc/distance.hpp"
#include "dadc/errors.hpp"

using namespace dadc;

TEST_SUITE("dataset") {

TEST_CASE("headerless numeric rows load as coordinates") {
    std::istringstream in("1.5,2\n-3,4.25\n");
    Dataset ds = load_dataset(in);
    CHECK(ds.size() == 2);
    CHECK(ds.dim == 2);
    CHECK_FALSE(ds.has_labels());
    CHECK(ds.coords == std::vector<double>{1.5, 2.0, -3.0, 4.25});
}

TEST_CASE("header row with trailing label column declares truth labels") {
    std::istringstream in("x,y,label\n0,0,1\n1,0,1\n5,5,2\n");
    Dataset ds = load_dataset(in);
    CHECK(ds.dim == 2);
    CHECK(ds.labels == std::vector<int>{1, 1, 2});
}

TEST_CASE("header casing of the label column is ignored") {
    std::istringstream in("x,y,Label\n0,0,3\n");
    Dataset ds = load_dataset(in);
    CHECK(ds.labels == std::vector<int>{3});
}

TEST_CASE("header without label column yields unlabeled points") {
    std::istringstream in("foo,bar\n1,2\n");
    Dataset ds = load_dataset(in);
    CHECK(ds.dim == 2);
    CHECK_FALSE(ds.has_labels());
}

TEST_CASE("blank lines and CRLF endings are tolerated") {
    std::istringstream in("x,y\r\n\r\n1,2\r\n\n3,4\n");
    Dataset ds = load_dataset(in);
    CHECK(ds.size() == 2);
    CHECK(ds.coords == std::vector<double>{1.0, 2.0, 3.0, 4.0});
}

TEST_CASE("unparsable coordinate names its 1-based line") {
    std::istringstream in("x,y\n1,2\n3,oops\n");
    CHECK_THROWS_WITH_AS(load_dataset(in), doctest::Contains("line 3"), parse_error);
}

TEST_CASE("unparsable label names its line") {
    std::istringstream in("x,label\n1,2\n3,0.5\n");
    CHECK_THROWS_WITH_AS(load_dataset(in), doctest::Contains("line 3"), parse_error);
}

TEST_CASE("ragged rows are a format error") {
    std::istringstream in("1,2\n3,4,5\n");
    CHECK_THROWS_AS(load_dataset(in), format_error);
}

TEST_CASE("input without data rows is an empty-dataset error") {
    std::istringstream header_only("x,y\n");
    CHECK_THROWS_AS(load_dataset(header_only), empty_dataset_error);
    std::istringstream blank("\n\n");
    CHECK_THROWS_AS(load_dataset(blank), empty_dataset_error);
}

TEST_CASE("save/load round-trip preserves coordinates and labels exactly") {
    Dataset ds;
    ds.dim = 2;
    ds.coords = {0.1, -2.25, 1e-9, 3.0000000001, 12345.6789, 0.0};
    ds.labels = {0, 1, -1};
    std::ostringstream out;
    save_dataset(out, ds);
    CHECK(out.str().substr(0, 10) == "x,y,label\n");
    std::istringstream in(out.str());
    Dataset back = load_dataset(in);
    CHECK(back.dim == ds.dim);
    CHECK(back.coords == ds.coords);
    CHECK(back.labels == ds.labels);
}

TEST_CASE("high-dimensional save uses generated column names") {
    Dataset ds;
    ds.dim = 4;
    ds.coords = {1, 2, 3, 4};
    std::ostringstream out;
    save_dataset(out, ds);
    CHECK(out.str().substr(0, 12) == "x0,x1,x2,x3\n");
}

TEST_CASE("distance matrix loads square input") {
    std::istringstream in("0,1\n1,0\n");
    std::size_t n = 0;
    auto m = load_distance_matrix(in, n);
    CHECK(n == 2);
    CHECK(m == std::vector<double>{0.0, 1.0, 1.0, 0.0});
}

TEST_CASE("non-square matrix is a format error") {
    std::istringstream in("0,1,2\n1,0,3\n");
    std::size_t n = 0;
    CHECK_THROWS_AS(load_distance_matrix(in, n), format_error);
}

TEST_CASE("matrix source validates symmetry, diagonal, and signs") {
    CHECK_THROWS_AS(DistanceSource::from_matrix({0, 1, 2, 0}, 2), validation_error);
    CHECK_THROWS_AS(DistanceSource::from_matrix({1, 1, 1, 0}, 2), validation_error);
    CHECK_THROWS_AS(DistanceSource::from_matrix({0, -1, -1, 0}, 2), validation_error);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(DistanceSource::from_matrix({0, nan, nan, 0}, 2), validation_error);
    DistanceSource ok = DistanceSource::from_matrix({0, 2, 2, 0}, 2);
    CHECK(ok(0, 1) == 2.0);
    CHECK_FALSE(ok.metric_mode());
}

TEST_CASE("shortest round-trip formatting re-parses to the same double") {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, -7.25, 9.234}) {
        std::istringstream in("x\n" + format_double(v) + "\n");
        Dataset back = load_dataset(in);
        CHECK(back.coords[0] == v);
    }
}

} // TEST_SUITE
