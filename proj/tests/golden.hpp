#pragma once

// Reference values for p = 29, theta = 2: the four DHL sequences and the
// period-116 constructions, plus the small p = 5 case. Every string below
// was derived from the cyclotomic class tables and cross-checked against an
// independent implementation before being frozen here (b = 0000 is the
// complement of b = 1111 by construction).

namespace golden {

inline constexpr const char* kS1 = "01110001000100101101110111000";
inline constexpr const char* kS2 = "01000001101010011010100111110";
inline constexpr const char* kS3 = "00111110010101100101011000001";
inline constexpr const char* kS4 = "00001110111011010010001000111";

inline constexpr const char* kU0000 =
    "000001101110110111101110101100000111101100101001000110011100011100111111000011000000"
    "10101101010100010110000001001011";
inline constexpr const char* kU1111 =
    "111110010001001000010001010011111000010011010110111001100011100011000000111100111111"
    "01010010101011101001111110110100";
inline constexpr const char* kU1010 =
    "101011000100011101000100000110101101000110000011101100110110110110010101101001101010"
    "00000111111110111100101011100001";
inline constexpr const char* kU0101 =
    "010100111011100010111011111001010010111001111100010011001001001001101010010110010101"
    "11111000000001000011010100011110";

// Tuple E2 = (s4, s1, s2, s2) with b = (0,1,0,1).
inline constexpr const char* kUE2 =
    "011000110000001111001111110101001010101110100111111011010001111001000100100001000101"
    "00111110000100110101101110011000";

// p = 5, tuple T1, b = (0,0,0,0).
inline constexpr const char* kU5 = "00010000110000101111";

}  // namespace golden
