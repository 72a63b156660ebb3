#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace testing {

inline int failures = 0;
inline int checks = 0;
inline const char* current = "";

inline void begin(const char* name) {
    current = name;
    std::printf("-- %s\n", name);
}

inline void check(bool ok, const char* expr, const char* file, int line) {
    ++checks;
    if (!ok) {
        ++failures;
        std::printf("   FAIL %s:%d in %s: %s\n", file, line, current, expr);
    }
}

inline int summary() {
    if (failures == 0) {
        std::printf("all %d checks passed\n", checks);
        return 0;
    }
    std::printf("%d of %d checks FAILED\n", failures, checks);
    return 1;
}

}  // namespace testing

#define CHECK(expr) ::testing::check(static_cast<bool>(expr), #expr, __FILE__, __LINE__)
#define CHECK_EQ(a, b) \
    ::testing::check((a) == (b), #a " == " #b, __FILE__, __LINE__)
#define TEST_BEGIN(name) ::testing::begin(name)
