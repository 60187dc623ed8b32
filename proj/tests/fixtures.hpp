#pragma once

// Reference matrices in the plain text format.

namespace fixture {

// D(7,5) member with tdet 9.
inline constexpr const char* kExample75 =
    "1 0 2 2 2\n"
    "0 1 2 2 2\n"
    "2 2 1 1 1\n"
    "2 2 1 1 1\n"
    "2 2 1 1 1\n";

// D(4,6) 0/1 circulant with tdet 6.
inline constexpr const char* kCirculant46 =
    "1 1 1 1 0 0\n"
    "0 1 1 1 1 0\n"
    "0 0 1 1 1 1\n"
    "1 0 0 1 1 1\n"
    "1 1 0 0 1 1\n"
    "1 1 1 0 0 1\n";

// D(7,6) member with tdet 10.
inline constexpr const char* kExample76 =
    "1 0 2 1 2 1\n"
    "0 1 1 2 1 2\n"
    "2 1 1 1 1 1\n"
    "1 2 1 1 1 1\n"
    "2 1 1 1 1 1\n"
    "1 2 1 1 1 1\n";

// D(9,6) worst case for the cube: 54 - 12 = 42 moves.
inline constexpr const char* kRubik96 =
    "1 1 1 2 2 2\n"
    "1 1 1 2 2 2\n"
    "1 1 1 2 2 2\n"
    "2 2 2 1 1 1\n"
    "2 2 2 1 1 1\n"
    "2 2 2 1 1 1\n";

// D(6,5) member with a 3x4 block of ones.
inline constexpr const char* kExample65 =
    "0 1 2 1 2\n"
    "0 2 1 2 1\n"
    "2 1 1 1 1\n"
    "2 1 1 1 1\n"
    "2 1 1 1 1\n";

}  // namespace fixture
