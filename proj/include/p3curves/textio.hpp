// Text grammar for workbench inputs: polynomials like 3*X^2*Y*T with +/-
// separated terms, comma-separated ideals, {2:2, 3:3} support functions,
// lo..hi windows, and row-major matrices with twist lists.
#pragma once

#include "p3curves/presented.hpp"
#include "p3curves/sharp.hpp"

namespace p3 {

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(const std::string& msg, int l, int c)
      : std::runtime_error(msg + " (line " + std::to_string(l) + ", column " +
                           std::to_string(c) + ")"),
        line(l),
        column(c) {}
};

Poly parse_poly(const std::string& text, const PolyRing& R);
std::vector<Poly> parse_poly_list(const std::string& text, const PolyRing& R);
SupportFunction parse_support_function(const std::string& text);
DegreeWindow parse_window(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);
// rows separated by ';', entries by ','; shape must match the twist lists
Matrix parse_matrix(const std::string& text, const PolyRing& R, int rows, int cols);

std::string poly_list_str(const std::vector<Poly>& fs, const PolyRing& R);
std::string window_str(const DegreeWindow& w);

}  // namespace p3
