#include "vps/form.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "vps/errors.hpp"

namespace vps {

Form Form::monomial(Ring ring, int nvars, const Mono& m, const Scalar& c) {
  Form f(ring, nvars, m.degree());
  if (c != 0) f.terms_.emplace(m, c);
  return f;
}

Form Form::linear(Ring ring, const std::vector<Scalar>& c) {
  Form f(ring, static_cast<int>(c.size()), 1);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) f.terms_.emplace(Mono::var(static_cast<int>(i)), c[i]);
  return f;
}

Scalar Form::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Form::add_term(const Mono& m, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Form::check_compatible(const Form& o, const char* op) const {
  if (ring_ != o.ring_ || nvars_ != o.nvars_)
    throw DomainError(std::string(op) + ": ring mismatch");
  if (degree_ != o.degree_) throw DomainError(std::string(op) + ": degree mismatch");
}

void Form::axpy(const Scalar& c, const Form& other) {
  check_compatible(other, "axpy");
  if (c == 0) return;
  for (const auto& [m, v] : other.terms_) add_term(m, c * v);
}

Form& Form::operator+=(const Form& o) {
  check_compatible(o, "add");
  for (const auto& [m, v] : o.terms_) add_term(m, v);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  check_compatible(o, "sub");
  for (const auto& [m, v] : o.terms_) add_term(m, -v);
  return *this;
}

Form& Form::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Form operator*(const Form& a, const Form& b) {
  if (a.ring_ != b.ring_ || a.nvars_ != b.nvars_) throw DomainError("mul: ring mismatch");
  Form r(a.ring_, a.nvars_, a.degree_ + b.degree_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

bool operator==(const Form& a, const Form& b) {
  return a.ring_ == b.ring_ && a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

Form Form::times(const Mono& m) const {
  Form r(ring_, nvars_, degree_ + m.degree());
  for (const auto& [t, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), t * m, c);
  return r;
}

Form Form::monic() const {
  if (is_zero()) return *this;
  Form r = *this;
  Scalar inv = 1 / lead_coeff();
  r *= inv;
  return r;
}

Form Form::derivative(int var) const {
  Form r(ring_, nvars_, degree_ > 0 ? degree_ - 1 : 0);
  for (const auto& [m, c] : terms_) {
    if (!m.e[var]) continue;
    Mono d = m;
    d.e[var]--;
    r.add_term(d, c * m.e[var]);
  }
  return r;
}

Scalar Form::evaluate(const std::vector<Scalar>& point) const {
  Scalar total = 0;
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < nvars_ && t != 0; ++i)
      for (int k = 0; k < m.e[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

Form Form::substitute_linear(const std::vector<std::vector<Scalar>>& M) const {
  std::vector<Form> images;
  images.reserve(nvars_);
  for (int i = 0; i < nvars_; ++i) images.push_back(Form::linear(ring_, M[i]));
  Form r(ring_, nvars_, degree_);
  for (const auto& [m, c] : terms_) {
    Form p = Form::constant(ring_, nvars_, c);
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < m.e[i]; ++k) p = p * images[i];
    if (!p.is_zero()) r += p;
  }
  return r;
}

std::vector<Scalar> Form::coordinates(const std::vector<Mono>& basis) const {
  std::vector<Scalar> v(basis.size());
  std::size_t found = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto it = terms_.find(basis[i]);
    if (it != terms_.end()) {
      v[i] = it->second;
      ++found;
    }
  }
  if (found != terms_.size()) throw DomainError("form has monomials outside the basis");
  return v;
}

std::string Form::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  const char var = var_char(ring_);
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    bool unit_mono = m.degree() == 0;
    if (a != 1 || unit_mono) {
      out += a.get_str();
      if (!unit_mono) out += "*";
    }
    if (!unit_mono) out += m.str(var);
  }
  return out;
}

Form form_arith(const Form& a, const Form& b, FormOp op) {
  switch (op) {
    case FormOp::Add: return a + b;
    case FormOp::Sub: return a - b;
    case FormOp::Mul: return a * b;
  }
  throw InternalError("unknown form op");
}

Form form_scale(const Form& a, const Scalar& c) { return a * c; }

namespace {

class Lexer {
 public:
  Lexer(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char get() {
    skip_ws();
    return text_[pos_++];
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, pos_ + 1); }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

struct RawTerm {
  Scalar coeff;
  std::vector<int> exps;
  char letter = 0;
  std::size_t column = 0;
};

std::vector<RawTerm> parse_terms(std::string_view text, int nvars, std::size_t line, std::string_view letters) {
  if (nvars < 1 || nvars > kMaxVars) throw DomainError("number of variables must be in 1.." + std::to_string(kMaxVars));
  Lexer lx(text, line);
  if (lx.done()) lx.fail("empty polynomial");
  std::vector<RawTerm> terms;
  bool first = true;
  while (!lx.done()) {
    int sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      lx.get();
      sign = c == '-' ? -1 : 1;
    } else if (!first) {
      lx.fail("expected '+' or '-'");
    }
    first = false;
    RawTerm t;
    t.coeff = sign;
    t.exps.assign(nvars, 0);
    t.column = lx.pos() + 1;
    bool need_factor = true;
    while (need_factor) {
      char p = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(p))) {
        mpz_class num(lx.digits());
        mpz_class den(1);
        if (lx.peek() == '/') {
          lx.get();
          den = mpz_class(lx.digits());
          if (den == 0) lx.fail("zero denominator");
        }
        Scalar s(num, den);
        s.canonicalize();
        t.coeff *= s;
      } else if (p && letters.find(p) != std::string_view::npos) {
        lx.get();
        if (t.letter && t.letter != p) lx.fail("mixed variable letters");
        t.letter = p;
        int idx = std::stoi(lx.digits());
        if (idx < 1 || idx > nvars) lx.fail("variable index out of range 1.." + std::to_string(nvars));
        int e = 1;
        if (lx.peek() == '^') {
          lx.get();
          e = std::stoi(lx.digits());
        }
        t.exps[idx - 1] += e;
      } else {
        lx.fail(p ? std::string("unexpected character '") + p + "'" : "unexpected end of input");
      }
      if (lx.peek() == '*') {
        lx.get();
      } else {
        need_factor = false;
      }
    }
    terms.push_back(std::move(t));
  }
  return terms;
}

}  // namespace

int scan_nvars(std::string_view text) {
  int best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if ((text[i] == 'x' || text[i] == 'y') && i + 1 < text.size() &&
        std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      std::size_t j = i + 1;
      int v = 0;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) v = v * 10 + (text[j++] - '0');
      best = std::max(best, v);
    }
  }
  return best;
}

Form parse_form(std::string_view text, int nvars, Ring default_ring, std::size_t line) {
  auto terms = parse_terms(text, nvars, line, "xy");
  char letter = 0;
  for (const auto& t : terms) {
    if (t.letter && letter && t.letter != letter) throw ParseError("mixed x and y variables", line, t.column);
    if (t.letter) letter = t.letter;
  }
  Ring ring = letter == 'x' ? Ring::S : letter == 'y' ? Ring::T : default_ring;
  int degree = -1;
  Form f;
  for (const auto& t : terms) {
    int d = 0;
    for (int e : t.exps) d += e;
    if (degree < 0) {
      degree = d;
      f = Form(ring, nvars, degree);
    } else if (d != degree) {
      throw DomainError("inhomogeneous polynomial at line " + std::to_string(line) + ", column " +
                        std::to_string(t.column));
    }
    f.add_term(Mono::from_exponents(t.exps), t.coeff);
  }
  return f;
}

AffinePoly parse_affine(std::string_view text, int nvars, char letter) {
  if (nvars < 1 || nvars > kMaxVars) throw DomainError("number of variables must be in 1.." + std::to_string(kMaxVars));
  AffinePoly out;
  for (const auto& t : parse_terms(text, nvars, 1, std::string_view(&letter, 1))) {
    Mono m = Mono::from_exponents(t.exps);
    Scalar c = out[m] + t.coeff;
    if (c == 0) out.erase(m); else out[m] = c;
  }
  return out;
}

IdealText parse_ideal_text(std::string_view text) {
  IdealText out;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    auto hash = raw.find('#');
    std::string_view line = hash == std::string_view::npos ? raw : raw.substr(0, hash);
    std::string trimmed(line);
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
    std::size_t lead = 0;
    while (lead < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[lead]))) ++lead;
    trimmed.erase(0, lead);
    if (trimmed.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!have_header) {
      std::istringstream is(trimmed);
      std::string kw, ring, nspec;
      is >> kw >> ring >> nspec;
      if (kw != "ring" || (ring != "S" && ring != "T") || nspec.rfind("n=", 0) != 0)
        throw ParseError("expected header 'ring S n=<n>'", line_no, lead + 1);
      out.ring = ring == "S" ? Ring::S : Ring::T;
      try {
        out.nvars = std::stoi(nspec.substr(2));
      } catch (const std::exception&) {
        throw ParseError("bad variable count", line_no, lead + 1);
      }
      if (out.nvars < 1 || out.nvars > kMaxVars) throw ParseError("variable count out of range", line_no, lead + 1);
      have_header = true;
      continue;
    }
    Form f = parse_form(trimmed, out.nvars, out.ring, line_no);
    if (f.ring() != out.ring) throw ParseError("generator ring does not match header", line_no, lead + 1);
    out.generators.push_back(std::move(f));
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError("missing 'ring' header", line_no, 1);
  return out;
}

std::string format_ideal_text(const IdealText& ideal) {
  std::string out = std::string("ring ") + (ideal.ring == Ring::S ? "S" : "T") + " n=" + std::to_string(ideal.nvars) + "\n";
  for (const auto& g : ideal.generators) out += g.str() + "\n";
  return out;
}

IdealText read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_ideal_text(ss.str());
}

void write_ideal_file(const std::string& path, const IdealText& ideal) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << format_ideal_text(ideal);
}

}  // namespace vps
