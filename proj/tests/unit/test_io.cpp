#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "bayergrad/io.hpp"
#include "helpers.hpp"

using namespace bayergrad;
namespace fs = std::filesystem;

namespace {
struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() / ("bayergrad_io_test_" + std::to_string(counter++));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};
}  // namespace

TEST_CASE("8-bit quantization endpoints map to 0.0 and 1.0") {
    TempDir tmp;
    PlanarImage img(2, 2, 1);
    img.at(0, 0, 0) = 1.0f;
    img.at(0, 0, 1) = 0.0f;
    const fs::path p = tmp.path / "q.pgm";
    save_image(p, img, 8);
    const LoadedImage li = load_image(p);
    CHECK(li.bit_depth == 8);
    CHECK(li.image.at(0, 0, 0) == 1.0f);
    CHECK(li.image.at(0, 0, 1) == 0.0f);
}

TEST_CASE("16-bit sample 32768 normalizes to 32768/65535") {
    TempDir tmp;
    const fs::path p = tmp.path / "h.pgm";
    {
        std::ofstream f(p, std::ios::binary);
        f << "P5\n2 1\n65535\n";
        const unsigned char bytes[4] = {0x80, 0x00, 0x00, 0x00};  // 32768, 0 big-endian
        f.write(reinterpret_cast<const char*>(bytes), 4);
    }
    const LoadedImage li = load_image(p);
    CHECK(li.bit_depth == 16);
    CHECK(li.image.at(0, 0, 0) == doctest::Approx(32768.0 / 65535.0).epsilon(1e-7));
    CHECK(li.image.at(0, 0, 1) == 0.0f);
}

TEST_CASE("png and pnm round-trip an 8-bit random image exactly") {
    TempDir tmp;
    PlanarImage img = testutil::random_image(13, 7, 3, 3);
    // snap to the 8-bit grid so the round trip is exact
    for (auto& v : img.samples) v = std::round(v * 255.0f) / 255.0f;
    for (const char* name : {"rt.png", "rt.ppm"}) {
        const fs::path p = tmp.path / name;
        save_image(p, img, 8);
        const LoadedImage li = load_image(p);
        REQUIRE(li.image.same_shape(img));
        for (std::size_t i = 0; i < img.samples.size(); ++i)
            CHECK(li.image.samples[i] == doctest::Approx(img.samples[i]).epsilon(1e-7));
    }
}

TEST_CASE("16-bit png round trip") {
    TempDir tmp;
    PlanarImage img = testutil::random_image(5, 4, 1, 8);
    for (auto& v : img.samples) v = std::round(v * 65535.0f) / 65535.0f;
    const fs::path p = tmp.path / "rt16.png";
    save_image(p, img, 16);
    const LoadedImage li = load_image(p);
    CHECK(li.bit_depth == 16);
    for (std::size_t i = 0; i < img.samples.size(); ++i)
        CHECK(li.image.samples[i] == doctest::Approx(img.samples[i]).epsilon(1e-7));
}

TEST_CASE("inverse video writes 255 where the magnitude is zero") {
    TempDir tmp;
    PlanarImage img(2, 2, 1);  // all zeros
    const fs::path p = tmp.path / "inv.pgm";
    save_inverse_video(p, img);
    std::ifstream f(p, std::ios::binary);
    std::string header;
    std::getline(f, header);  // P5
    std::getline(f, header);  // dims
    std::getline(f, header);  // maxval
    unsigned char b = 0;
    f.read(reinterpret_cast<char*>(&b), 1);
    CHECK(static_cast<int>(b) == 255);
}

TEST_CASE("float dump round trip") {
    TempDir tmp;
    const PlanarImage img = testutil::random_image(9, 5, 1, 4, -2.0f, 2.0f);
    const fs::path p = tmp.path / "dump.f32";
    save_float_raw(p, img);
    const PlanarImage back = load_float_raw(p);
    CHECK(back.samples == img.samples);
}

TEST_CASE("csv parse-back oracle") {
    TempDir tmp;
    const fs::path p = tmp.path / "t.csv";
    write_csv(p, {"image", "value", "note"},
              {{"a", "1.5", "plain"}, {"b", "-2", "with, comma"}, {"c", "0", "quote \" inside"}});
    const CsvTable t = read_csv(p);
    REQUIRE(t.header.size() == 3);
    REQUIRE(t.rows.size() == 3);
    CHECK(t.rows[0][1] == "1.5");
    CHECK(t.rows[1][2] == "with, comma");
    CHECK(t.rows[2][2] == "quote \" inside");
}

TEST_CASE("load errors") {
    TempDir tmp;
    CHECK_THROWS_AS(load_image(tmp.path / "missing.png"), IoError);
    const fs::path bad = tmp.path / "bad.ppm";
    {
        std::ofstream f(bad, std::ios::binary);
        f << "P6\n4 4\n255\n";
        f << "xx";  // truncated payload
    }
    CHECK_THROWS_AS(load_image(bad), IoError);
    const fs::path unk = tmp.path / "img.bmp";
    { std::ofstream f(unk); f << "BM"; }
    CHECK_THROWS_AS(load_image(unk), IoError);
}

TEST_CASE("as_bayer validates shape") {
    CHECK_THROWS_AS(as_bayer(PlanarImage(5, 4, 1), CfaPattern::RGGB), InvariantError);
    CHECK_THROWS_AS(as_bayer(PlanarImage(4, 4, 3), CfaPattern::RGGB), InvariantError);
    const PlanarImage ok(4, 4, 1);
    CHECK_NOTHROW(as_bayer(ok, CfaPattern::BGGR));
}
