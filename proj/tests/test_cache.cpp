#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blocklie/cache.hpp"

#include <filesystem>
#include <fstream>
#include <unistd.h>

using namespace blocklie;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("blocklie_cache_test_" + std::to_string(::getpid()));
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

bool same_component(const GradedComponent& a, const GradedComponent& b) {
    if (a.words.size() != b.words.size()) return false;
    for (size_t i = 0; i < a.words.size(); ++i) {
        if (!(a.words[i] == b.words[i])) return false;
        if (a.polys[i] != b.polys[i]) return false;
    }
    return a.matrix == b.matrix && a.columns == b.columns;
}

} // namespace

TEST_CASE("cache round trip: cold and warm loads are identical") {
    TempDir tmp;
    ComponentCache cache(tmp.path.string());
    GradedComponent cold = cache.get(AlgebraKind::even, 12, 2);
    CHECK(std::filesystem::exists(cache.path_for(AlgebraKind::even, 12, 2)));
    GradedComponent warm = cache.get(AlgebraKind::even, 12, 2);
    CHECK(same_component(cold, warm));
    CHECK(same_component(cold, graded_component(AlgebraKind::even, 12, 2)));

    // warm load must not rewrite the file
    auto mtime = std::filesystem::last_write_time(cache.path_for(AlgebraKind::even, 12, 2));
    (void)cache.get(AlgebraKind::even, 12, 2);
    CHECK(std::filesystem::last_write_time(cache.path_for(AlgebraKind::even, 12, 2)) == mtime);
}

TEST_CASE("corrupted cache entries are detected by checksum and recomputed") {
    TempDir tmp;
    ComponentCache cache(tmp.path.string());
    (void)cache.get(AlgebraKind::depth, 8, 2);
    auto path = cache.path_for(AlgebraKind::depth, 8, 2);

    std::string contents = slurp(path);
    // flip a digit inside the payload
    auto pos = contents.find('\n');
    REQUIRE(pos != std::string::npos);
    for (size_t i = pos; i < contents.size(); ++i) {
        if (isdigit(static_cast<unsigned char>(contents[i]))) {
            contents[i] = contents[i] == '9' ? '1' : '9';
            break;
        }
    }
    std::ofstream(path, std::ios::trunc) << contents;

    GradedComponent recomputed = cache.get(AlgebraKind::depth, 8, 2);
    CHECK(same_component(recomputed, graded_component(AlgebraKind::depth, 8, 2)));
    // file healed on disk
    GradedComponent reloaded = cache.get(AlgebraKind::depth, 8, 2);
    CHECK(same_component(reloaded, recomputed));
}

TEST_CASE("a disabled cache just computes") {
    ComponentCache cache("");
    CHECK_FALSE(cache.enabled());
    GradedComponent c = cache.get(AlgebraKind::block, 8, 2);
    CHECK(same_component(c, graded_component(AlgebraKind::block, 8, 2)));
}

TEST_CASE("fnv1a64 is stable") {
    CHECK(fnv1a64("") == 14695981039346656037ull);
    CHECK(fnv1a64("blocklie") != fnv1a64("blocklpe"));
}
