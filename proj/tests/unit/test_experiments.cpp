#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "bayergrad/experiments.hpp"
#include "bayergrad/image_ops.hpp"
#include "bayergrad/io.hpp"
#include "helpers.hpp"

using namespace bayergrad;
namespace fs = std::filesystem;

namespace {
struct TempDir {
    fs::path path;
    explicit TempDir(const char* tag) {
        path = fs::temp_directory_path() / (std::string("bayergrad_exp_") + tag);
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

std::vector<DatasetImage> tiny_suite() {
    std::vector<DatasetImage> suite;
    for (int i = 0; i < 3; ++i) {
        DatasetImage d;
        d.name = "img" + std::to_string(i);
        d.image = testutil::random_image(64, 64, 3, 100 + i);
        suite.push_back(std::move(d));
    }
    return suite;
}
}  // namespace

TEST_CASE("pipeline1 output matches the unrolled stage sequence") {
    const PlanarImage color = testutil::random_image(32, 32, 3, 3);
    const BayerImage bay = mosaic(color, CfaPattern::RGGB);
    const PipelineResult res = run_pipeline(bay, PipelineSpec::pipeline1());
    CHECK(res.magnitude.width == 16);
    CHECK(res.magnitude.height == 16);
    CHECK(res.wall_ms >= 0.0);
    CHECK(res.peak_bytes > 0);
}

TEST_CASE("pipeline2 allocates more than pipeline1 on the same input") {
    const PlanarImage color = testutil::random_image(64, 64, 3, 5);
    const BayerImage bay = mosaic(color, CfaPattern::RGGB);
    const PipelineResult p1 = run_pipeline(bay, PipelineSpec::pipeline1());
    for (auto m : {DemosaicMethod::NearestNeighbor, DemosaicMethod::Bilinear,
                   DemosaicMethod::Bicubic, DemosaicMethod::AdaptiveColorPlane,
                   DemosaicMethod::Hybrid}) {
        const PipelineResult p2 = run_pipeline(bay, PipelineSpec::pipeline2(m));
        CHECK(p2.peak_bytes > p1.peak_bytes);
    }
}

TEST_CASE("experiment CSVs are byte-identical across runs and average correctly") {
    TempDir t1("a"), t2("b");
    const auto suite = tiny_suite();
    run_table2(suite, t1.path, GradientOperator::CentralDifference, CfaPattern::RGGB, 2);
    run_table2(suite, t2.path, GradientOperator::CentralDifference, CfaPattern::RGGB, 1);
    std::ifstream f1(t1.path / "table2.csv", std::ios::binary);
    std::ifstream f2(t2.path / "table2.csv", std::ios::binary);
    const std::string s1((std::istreambuf_iterator<char>(f1)), {});
    const std::string s2((std::istreambuf_iterator<char>(f2)), {});
    CHECK(s1 == s2);

    const CsvTable table = read_csv(t1.path / "table2.csv");
    REQUIRE(table.rows.size() == suite.size() + 1);
    for (std::size_t col = 1; col < table.header.size(); ++col) {
        double sum = 0.0;
        for (std::size_t r = 0; r + 1 < table.rows.size(); ++r)
            sum += std::stod(table.rows[r][col]);
        const double avg = std::stod(table.rows.back()[col]);
        CHECK(avg == doctest::Approx(sum / suite.size()).epsilon(1e-5));
    }
}

TEST_CASE("fig5 scenes: three conforming cases flat, sign-flip case at unit amplitude") {
    TempDir tmp("fig5");
    const auto rows = run_fig5(tmp.path, 64);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].max_grad_gr <= 1e-12);
    CHECK(rows[0].max_grad_gb <= 1e-12);
    CHECK(rows[1].max_grad_gr <= 1e-12);
    CHECK(rows[1].max_grad_gb <= 1e-12);
    // same-sign case: small but nonzero difference gradients
    CHECK(rows[2].max_grad_gr < 0.5);
    // sign-flip case reaches |delta| = 1 per axis (sqrt(2) at corners)
    CHECK(rows[3].edge_amp_gr == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(rows[3].max_grad_gr == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
    CHECK(fs::exists(tmp.path / "fig5.csv"));
    CHECK(fs::exists(tmp.path / "sign_flip_grad_gr.png"));
}

TEST_CASE("config parser: comments, spacing, later keys win") {
    TempDir tmp("cfg");
    const fs::path p = tmp.path / "run.conf";
    {
        std::ofstream f(p);
        f << "# experiment configuration\n";
        f << "pattern = rggb\n";
        f << "jobs=4   # inline comment\n";
        f << "  operator =  sobel\n";
        f << "jobs = 8\n";
        f << "not a pair\n";
    }
    const auto cfg = parse_config_file(p);
    CHECK(cfg.at("pattern") == "rggb");
    CHECK(cfg.at("operator") == "sobel");
    CHECK(cfg.at("jobs") == "8");
    CHECK(cfg.size() == 3);
}

TEST_CASE("load_dataset crops to multiples of four and skips non-images") {
    TempDir tmp("ds");
    const PlanarImage img = testutil::random_image(66, 67, 3, 9);
    save_image(tmp.path / "one.png", img);
    { std::ofstream f(tmp.path / "junk.png"); f << "not a png"; }
    { std::ofstream f(tmp.path / "note.txt"); f << "ignored"; }
    const auto suite = load_dataset(tmp.path);
    REQUIRE(suite.size() == 1);
    CHECK(suite[0].image.width == 64);
    CHECK(suite[0].image.height == 64);
    CHECK(suite[0].name == "one");
}
