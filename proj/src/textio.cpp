#include "p3curves/textio.hpp"

#include <cctype>

namespace p3 {

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n')) {
      if (s_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char get() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    ++col_;
    return s_[pos_++];
  }
  bool accept(char c) {
    if (peek() == c) {
      get();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  long long integer() {
    skip_ws();
    bool neg = accept('-');
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > (1LL << 50)) fail("integer literal too large");
      ++pos_;
      ++col_;
    }
    return neg ? -v : v;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

int var_index(char c) {
  for (int i = 0; i < kNumVars; ++i)
    if (kVarNames[i][0] == c) return i;
  return -1;
}

// term := integer ['*' factor]* | factor ['*' factor]*
// factor := VAR ['^' int]
Term parse_term(Cursor& cur, const PolyRing& R) {
  Monomial m;
  long long coeff = 1;
  bool saw_factor = false;
  if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    coeff = R.field.reduce(cur.integer());
    saw_factor = true;
    if (!cur.accept('*')) return {m, R.field.reduce(coeff)};
    saw_factor = false;
  }
  for (;;) {
    char c = cur.peek();
    int v = var_index(c);
    if (v < 0) {
      if (!saw_factor) cur.fail("expected a variable X, Y, Z or T");
      break;
    }
    cur.get();
    long long e = 1;
    if (cur.accept('^')) {
      e = cur.integer();
      if (e < 0 || e > 100) cur.fail("exponent out of range");
    }
    for (long long k = 0; k < e; ++k) m = m * Monomial::var(v);
    saw_factor = true;
    if (!cur.accept('*')) break;
    saw_factor = false;  // a '*' must be followed by another factor
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coeff = R.field.mul(R.field.reduce(coeff), R.field.reduce(cur.integer()));
      saw_factor = true;
      if (!cur.accept('*')) break;
      saw_factor = false;
    }
  }
  if (!saw_factor) cur.fail("dangling '*'");
  return {m, R.field.reduce(coeff)};
}

Poly parse_poly_at(Cursor& cur, const PolyRing& R) {
  std::vector<Term> ts;
  bool neg = false;
  if (cur.accept('-'))
    neg = true;
  else
    cur.accept('+');
  for (;;) {
    Term t = parse_term(cur, R);
    if (neg) t.c = R.field.neg(t.c);
    if (t.c) ts.push_back(t);
    if (cur.accept('+')) {
      neg = false;
    } else if (cur.accept('-')) {
      neg = true;
    } else {
      break;
    }
  }
  return Poly::collect(std::move(ts), R);
}

}  // namespace

Poly parse_poly(const std::string& text, const PolyRing& R) {
  Cursor cur(text);
  Poly f = parse_poly_at(cur, R);
  if (!cur.done()) cur.fail("trailing input after polynomial");
  return f;
}

std::vector<Poly> parse_poly_list(const std::string& text, const PolyRing& R) {
  Cursor cur(text);
  std::vector<Poly> out;
  if (cur.done()) return out;
  for (;;) {
    out.push_back(parse_poly_at(cur, R));
    if (cur.done()) break;
    cur.expect(',');
  }
  return out;
}

SupportFunction parse_support_function(const std::string& text) {
  Cursor cur(text);
  cur.expect('{');
  std::map<int, long long> vals;
  if (!cur.accept('}')) {
    for (;;) {
      long long n = cur.integer();
      cur.expect(':');
      long long v = cur.integer();
      if (v < 0) cur.fail("support function values must be nonnegative");
      if (n < -1000 || n > 1000) cur.fail("support point out of range");
      vals[static_cast<int>(n)] += v;
      if (cur.accept('}')) break;
      cur.expect(',');
    }
  }
  if (!cur.done()) cur.fail("trailing input after support function");
  return SupportFunction(std::move(vals));
}

DegreeWindow parse_window(const std::string& text) {
  Cursor cur(text);
  long long lo = cur.integer();
  cur.expect('.');
  cur.expect('.');
  long long hi = cur.integer();
  if (!cur.done()) cur.fail("trailing input after window");
  if (lo > hi) cur.fail("window low end exceeds high end");
  if (hi - lo > 200) cur.fail("window exceeds the size cap");
  return DegreeWindow{static_cast<int>(lo), static_cast<int>(hi)};
}

std::vector<int> parse_int_list(const std::string& text) {
  Cursor cur(text);
  std::vector<int> out;
  if (cur.done()) return out;
  for (;;) {
    long long v = cur.integer();
    if (v < -1000 || v > 1000) cur.fail("twist out of range");
    out.push_back(static_cast<int>(v));
    if (cur.done()) break;
    cur.expect(',');
  }
  return out;
}

Matrix parse_matrix(const std::string& text, const PolyRing& R, int rows, int cols) {
  // split on ';' then reuse the polynomial list parser per row
  std::vector<std::string> row_texts;
  std::string curs;
  for (char c : text) {
    if (c == ';') {
      row_texts.push_back(curs);
      curs.clear();
    } else {
      curs += c;
    }
  }
  row_texts.push_back(curs);
  if (static_cast<int>(row_texts.size()) != rows)
    throw ParseError("matrix has " + std::to_string(row_texts.size()) + " rows, expected " +
                         std::to_string(rows),
                     1, 1);
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    std::vector<Poly> entries = parse_poly_list(row_texts[i], R);
    if (static_cast<int>(entries.size()) != cols)
      throw ParseError("matrix row " + std::to_string(i) + " has " +
                           std::to_string(entries.size()) + " entries, expected " +
                           std::to_string(cols),
                       1, 1);
    for (int j = 0; j < cols; ++j) m.a[i][j] = entries[j];
  }
  return m;
}

std::string poly_list_str(const std::vector<Poly>& fs, const PolyRing& R) {
  std::string s;
  for (const Poly& f : fs) {
    if (!s.empty()) s += ", ";
    s += f.str(R);
  }
  return s;
}

std::string window_str(const DegreeWindow& w) {
  return std::to_string(w.lo) + ".." + std::to_string(w.hi);
}

}  // namespace p3
