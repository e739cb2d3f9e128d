#pragma once

#include <array>
#include <string_view>

namespace cpav::golden {

// Transcribed published tables, in the same monomial syntax parse_poly_xy reads
// and the LaTeX formatter emits. u_tables[f][n-1] is U_{tau,n}(y) for n = 1..11;
// nm_series[f][n] is the n!-scaled t^n coefficient of NM_tau(t,x,y) for n = 0..8;
// the four families f are tau = 1324, 13245, 132456, 1324567.

inline constexpr std::array<std::string_view, 4> family_labels{"1324", "13245", "132456", "1324567"};
inline constexpr std::array<int, 4> family_p{4, 5, 6, 7};

inline constexpr std::array<std::array<std::string_view, 11>, 4> u_tables{{
    // 1324
    {{"-y", "-y+y^2", "-y+2 y^2-y^3", "-y+4 y^2-3 y^3+y^4", "-y+6 y^2-8 y^3+4 y^4-y^5",
      "-y+8 y^2-18 y^3+13 y^4-5 y^5+y^6", "-y+10 y^2-32 y^3+36 y^4-19 y^5+6 y^6-y^7",
      "-y+12 y^2-50 y^3+85 y^4-61 y^5+26 y^6-7 y^7+y^8",
      "-y+14 y^2-72 y^3+166 y^4-170 y^5+94 y^6-34 y^7+8 y^8-y^9",
      "-y+16 y^2-98 y^3+287 y^4-412 y^5+296 y^6-136 y^7+43 y^8-9 y^9+y^{10}",
      "-y+18 y^2-128 y^3+456 y^4-854 y^5+824 y^6-473 y^7+188 y^8-53 y^9+10 y^{10}-y^{11}"}},
    // 13245
    {{"-y", "-y+y^2", "-y+2 y^2-y^3", "-y+3 y^2-3 y^3+y^4", "-y+5 y^2-6 y^3+4 y^4-y^5",
      "-y+7 y^2-12 y^3+10 y^4-5 y^5+y^6", "-y+9 y^2-21 y^3+23 y^4-15 y^5+6 y^6-y^7",
      "-y+11 y^2-34 y^3+47 y^4-39 y^5+21 y^6-7 y^7+y^8",
      "-y+13 y^2-51 y^3+88 y^4-90 y^5+61 y^6-28 y^7+8 y^8-y^9",
      "-y+15 y^2-72 y^3+153 y^4-189 y^5+156 y^6-90 y^7+36 y^8-9 y^9+y^{10}",
      "-y+17 y^2-97 y^3+250 y^4-368 y^5+361 y^6-252 y^7+127 y^8-45 y^9+10 y^{10}-y^{11}"}},
    // 132456
    {{"-y", "-y+y^2", "-y+2 y^2-y^3", "-y+3 y^2-3 y^3+y^4", "-y+4 y^2-6 y^3+4 y^4-y^5",
      "-y+6 y^2-10 y^3+10 y^4-5 y^5+y^6", "-y+8 y^2-17 y^3+20 y^4-15 y^5+6 y^6-y^7",
      "-y+10 y^2-27 y^3+38 y^4-35 y^5+21 y^6-7 y^7+y^8",
      "-y+12 y^2-40 y^3+68 y^4-74 y^5+56 y^6-28 y^7+8 y^8-y^9",
      "-y+14 y^2-57 y^3+114 y^4-146 y^5+131 y^6-84 y^7+36 y^8-9 y^9+y^{10}",
      "-y+16 y^2-78 y^3+182 y^4-270 y^5+282 y^6-216 y^7+120 y^8-45 y^9+10 y^{10}-y^{11}"}},
    // 1324567
    {{"-y", "-y+y^2", "-y+2 y^2-y^3", "-y+3 y^2-3 y^3+y^4", "-y+4 y^2-6 y^3+4 y^4-y^5",
      "-y+5 y^2-10 y^3+10 y^4-5 y^5+y^6", "-y+7 y^2-15 y^3+20 y^4-15 y^5+6 y^6-y^7",
      "-y+9 y^2-23 y^3+35 y^4-35 y^5+21 y^6-7 y^7+y^8",
      "-y+11 y^2-34 y^3+59 y^4-70 y^5+56 y^6-28 y^7+8 y^8-y^9",
      "-y+13 y^2-48 y^3+96 y^4-130 y^5+126 y^6-84 y^7+36 y^8-9 y^9+y^{10}",
      "-y+15 y^2-65 y^3+150 y^4-230 y^5+257 y^6-210 y^7+120 y^8-45 y^9+10 y^{10}-y^{11}"}},
}};

inline constexpr std::array<std::array<std::string_view, 9>, 4> nm_series{{
    // 1324
    {{"1", "x y", "x y+x^2 y^2", "x y+x y^2+3 x^2 y^2+x^3 y^3",
      "x y+3 x y^2+7 x^2 y^2+x y^3+4 x^2 y^3+6 x^3 y^3+x^4 y^4",
      "x y+9 x y^2+15 x^2 y^2+8 x y^3+25 x^2 y^3+25 x^3 y^3+x y^4+5 x^2 y^4+10 x^3 y^4+10 x^4 y^4+x^5 y^5",
      "x y+23 x y^2+31 x^2 y^2+47 x y^3+119 x^2 y^3+90 x^3 y^3+20 x y^4+73 x^2 y^4+105 x^3 y^4+65 x^4 y^4+"
      "x y^5+6 x^2 y^5+15 x^3 y^5+20 x^4 y^5+15 x^5 y^5+x^6 y^6",
      "x y+53 x y^2+63 x^2 y^2+221 x y^3+490 x^2 y^3+301 x^3 y^3+202 x y^4+637 x^2 y^4+749 x^3 y^4+"
      "350 x^4 y^4+47 x y^5+196 x^2 y^5+343 x^3 y^5+315 x^4 y^5+140 x^5 y^5+x y^6+7 x^2 y^6+21 x^3 y^6+"
      "35 x^4 y^6+35 x^5 y^6+21 x^6 y^6+x^7 y^7",
      "x y+115 x y^2+127 x^2 y^2+922 x y^3+1838 x^2 y^3+966 x^3 y^3+1571 x y^4+4421 x^2 y^4+4466 x^3 y^4+"
      "1701 x^4 y^4+795 x y^5+2890 x^2 y^5+4270 x^3 y^5+3164 x^4 y^5+1050 x^5 y^5+105 x y^6+495 x^2 y^6+"
      "1008 x^3 y^6+1148 x^4 y^6+770 x^5 y^6+266 x^6 y^6+x y^7+8 x^2 y^7+28 x^3 y^7+56 x^4 y^7+70 x^5 y^7+"
      "56 x^6 y^7+28 x^7 y^7+x^8 y^8"}},
    // 13245
    {{"1", "x y", "x y+x^2 y^2", "x y+x y^2+3 x^2 y^2+x^3 y^3",
      "x y+4 x y^2+7 x^2 y^2+x y^3+4 x^2 y^3+6 x^3 y^3+x^4 y^4",
      "x y+10 x y^2+15 x^2 y^2+11 x y^3+30 x^2 y^3+25 x^3 y^3+x y^4+5 x^2 y^4+10 x^3 y^4+10 x^4 y^4+x^5 y^5",
      "x y+24 x y^2+31 x^2 y^2+62 x y^3+140 x^2 y^3+90 x^3 y^3+26 x y^4+91 x^2 y^4+120 x^3 y^4+65 x^4 y^4+"
      "x y^5+6 x^2 y^5+15 x^3 y^5+20 x^4 y^5+15 x^5 y^5+x^6 y^6",
      "x y+54 x y^2+63 x^2 y^2+273 x y^3+553 x^2 y^3+301 x^3 y^3+292 x y^4+840 x^2 y^4+875 x^3 y^4+"
      "350 x^4 y^4+57 x y^5+238 x^2 y^5+406 x^3 y^5+350 x^4 y^5+140 x^5 y^5+x y^6+7 x^2 y^6+21 x^3 y^6+"
      "35 x^4 y^6+35 x^5 y^6+21 x^6 y^6+x^7 y^7",
      "x y+116 x y^2+127 x^2 y^2+1068 x y^3+2000 x^2 y^3+966 x^3 y^3+2228 x y^4+5726 x^2 y^4+5152 x^3 y^4+"
      "1701 x^4 y^4+1171 x y^5+4016 x^2 y^5+5474 x^3 y^5+3640 x^4 y^5+1050 x^5 y^5+120 x y^6+575 x^2 y^6+"
      "1176 x^3 y^6+1316 x^4 y^6+840 x^5 y^6+266 x^6 y^6+x y^7+8 x^2 y^7+28 x^3 y^7+56 x^4 y^7+70 x^5 y^7+"
      "56 x^6 y^7+28 x^7 y^7+x^8 y^8"}},
    // 132456
    {{"1", "x y", "x y+x^2 y^2", "x y+x y^2+3 x^2 y^2+x^3 y^3",
      "x y+4 x y^2+7 x^2 y^2+x y^3+4 x^2 y^3+6 x^3 y^3+x^4 y^4",
      "x y+11 x y^2+15 x^2 y^2+11 x y^3+30 x^2 y^3+25 x^3 y^3+x y^4+5 x^2 y^4+10 x^3 y^4+10 x^4 y^4+x^5 y^5",
      "x y+25 x y^2+31 x^2 y^2+66 x y^3+146 x^2 y^3+90 x^3 y^3+26 x y^4+91 x^2 y^4+120 x^3 y^4+65 x^4 y^4+"
      "x y^5+6 x^2 y^5+15 x^3 y^5+20 x^4 y^5+15 x^5 y^5+x^6 y^6",
      "x y+55 x y^2+63 x^2 y^2+297 x y^3+581 x^2 y^3+301 x^3 y^3+302 x y^4+868 x^2 y^4+896 x^3 y^4+"
      "350 x^4 y^4+57 x y^5+238 x^2 y^5+406 x^3 y^5+350 x^4 y^5+140 x^5 y^5+x y^6+7 x^2 y^6+21 x^3 y^6+"
      "35 x^4 y^6+35 x^5 y^6+21 x^6 y^6+x^7 y^7",
      "x y+117 x y^2+127 x^2 y^2+1153 x y^3+2092 x^2 y^3+966 x^3 y^3+2401 x y^4+6086 x^2 y^4+5348 x^3 y^4+"
      "1701 x^4 y^4+1191 x y^5+4096 x^2 y^5+5586 x^3 y^5+3696 x^4 y^5+1050 x^5 y^5+120 x y^6+575 x^2 y^6+"
      "1176 x^3 y^6+1316 x^4 y^6+840 x^5 y^6+266 x^6 y^6+x y^7+8 x^2 y^7+28 x^3 y^7+56 x^4 y^7+70 x^5 y^7+"
      "56 x^6 y^7+28 x^7 y^7+x^8 y^8"}},
    // 1324567
    {{"1", "x y", "x y+x^2 y^2", "x y+x y^2+3 x^2 y^2+x^3 y^3",
      "x y+4 x y^2+7 x^2 y^2+x y^3+4 x^2 y^3+6 x^3 y^3+x^4 y^4",
      "x y+11 x y^2+15 x^2 y^2+11 x y^3+30 x^2 y^3+25 x^3 y^3+x y^4+5 x^2 y^4+10 x^3 y^4+10 x^4 y^4+x^5 y^5",
      "x y+26 x y^2+31 x^2 y^2+66 x y^3+146 x^2 y^3+90 x^3 y^3+26 x y^4+91 x^2 y^4+120 x^3 y^4+65 x^4 y^4+"
      "x y^5+6 x^2 y^5+15 x^3 y^5+20 x^4 y^5+15 x^5 y^5+x^6 y^6",
      "x y+56 x y^2+63 x^2 y^2+302 x y^3+588 x^2 y^3+301 x^3 y^3+302 x y^4+868 x^2 y^4+896 x^3 y^4+"
      "350 x^4 y^4+57 x y^5+238 x^2 y^5+406 x^3 y^5+350 x^4 y^5+140 x^5 y^5+x y^6+7 x^2 y^6+21 x^3 y^6+"
      "35 x^4 y^6+35 x^5 y^6+21 x^6 y^6+x^7 y^7",
      "x y+118 x y^2+127 x^2 y^2+1185 x y^3+2128 x^2 y^3+966 x^3 y^3+2416 x y^4+6126 x^2 y^4+5376 x^3 y^4+"
      "1701 x^4 y^4+1191 x y^5+4096 x^2 y^5+5586 x^3 y^5+3696 x^4 y^5+1050 x^5 y^5+120 x y^6+575 x^2 y^6+"
      "1176 x^3 y^6+1316 x^4 y^6+840 x^5 y^6+266 x^6 y^6+x y^7+8 x^2 y^7+28 x^3 y^7+56 x^4 y^7+70 x^5 y^7+"
      "56 x^6 y^7+28 x^7 y^7+x^8 y^8"}},
}};

}  // namespace cpav::golden
