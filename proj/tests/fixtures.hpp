#ifndef SYMRANK_TESTS_FIXTURES_HPP
#define SYMRANK_TESTS_FIXTURES_HPP

#include <array>
#include <string_view>

namespace fixtures {

// Golden data for the degree-2 catalecticant of sigma(4,5), rows and columns
// in the canonical monomial order 11,12,13,14,15,22,23,24,25,33,34,35,44,45,55
// (row m, column b holds the coefficient of m in the image of the operator b).

inline constexpr std::array<std::string_view, 15> kSigma45Cat2 = {
    "000000000000000",  // 11
    "000000000011010",  // 12
    "000000011000010",  // 13
    "000000101001000",  // 14
    "000000110010000",  // 15
    "000000000000000",  // 22
    "000110000000010",  // 23
    "001010000001000",  // 24
    "001100000010000",  // 25
    "000000000000000",  // 33
    "010010001000000",  // 34
    "010100010000000",  // 35
    "000000000000000",  // 44
    "011000100000000",  // 45
    "000000000000000",  // 55
};

// The same matrix with zero rows and columns removed; labels 12,13,14,15,
// 23,24,25,34,35,45. Equals the 2-subset disjointness pattern on [5].

inline constexpr std::array<std::string_view, 10> kSigma45Cat2Refined = {
    "0000000111",  // 12
    "0000011001",  // 13
    "0000101010",  // 14
    "0000110100",  // 15
    "0011000001",  // 23
    "0101000010",  // 24
    "0110000100",  // 25
    "1001001000",  // 34
    "1010010000",  // 35
    "1100100000",  // 45
};

}  // namespace fixtures

#endif
