#include "curvspace/scalar.hpp"

#include <cctype>

namespace curvspace {

namespace {

Field join(Field a, Field b) {
  return (a == Field::QI || b == Field::QI) ? Field::QI : Field::Q;
}

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  std::size_t pos = 0;
  bool neg = false;
  if (text[pos] == '+' || text[pos] == '-') {
    neg = text[pos] == '-';
    ++pos;
  }
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) throw ParseError("expected digits in rational literal: '" + std::string(text) + "'");
  mpz_class num(std::string(text.substr(start, pos - start)), 10);
  mpz_class den(1);
  if (pos < text.size()) {
    if (text[pos] != '/') throw ParseError("malformed rational literal: '" + std::string(text) + "'");
    ++pos;
    std::size_t dstart = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == dstart || pos != text.size())
      throw ParseError("malformed rational literal: '" + std::string(text) + "'");
    den = mpz_class(std::string(text.substr(dstart, pos - dstart)), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  mpq_class q(num, den);
  q.canonicalize();
  if (neg) q = -q;
  return q;
}

} // namespace

Field parse_field(std::string_view name) {
  if (name == "q" || name == "Q") return Field::Q;
  if (name == "qi" || name == "QI" || name == "q(i)") return Field::QI;
  throw ParseError("unknown field '" + std::string(name) + "' (expected q or qi)");
}

Scalar::Scalar(long num, long den) : field_(Field::Q) {
  if (den == 0) throw Error("zero denominator");
  re_ = mpq_class(num, den);
  re_.canonicalize();
}

Scalar Scalar::i() {
  Scalar s;
  s.field_ = Field::QI;
  s.im_ = 1;
  return s;
}

Scalar Scalar::rational(const mpq_class& v) {
  Scalar s;
  s.re_ = v;
  s.re_.canonicalize();
  return s;
}

Scalar Scalar::gaussian(const mpq_class& re, const mpq_class& im) {
  Scalar s;
  s.field_ = Field::QI;
  s.re_ = re;
  s.im_ = im;
  s.re_.canonicalize();
  s.im_.canonicalize();
  return s;
}

Scalar Scalar::promoted(Field f) const {
  if (f == field_) return *this;
  if (f == Field::Q && !is_real())
    throw FieldMismatchError("cannot narrow " + str() + " to Q");
  Scalar s = *this;
  s.field_ = f;
  return s;
}

Scalar Scalar::conj() const {
  Scalar s = *this;
  s.im_ = -s.im_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  Scalar s;
  s.field_ = field_;
  if (is_real()) {
    s.re_ = 1 / re_;
  } else {
    mpq_class norm = re_ * re_ + im_ * im_;
    s.re_ = re_ / norm;
    s.im_ = -im_ / norm;
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.re_ = -s.re_;
  s.im_ = -s.im_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  field_ = join(field_, o.field_);
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  field_ = join(field_, o.field_);
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  field_ = join(field_, o.field_);
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error("division by zero");
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    field_ = join(field_, o.field_);
    re_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

int Scalar::compare(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re_, b.re_);
  if (c != 0) return c;
  return cmp(a.im_, b.im_);
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (sgn(re_) != 0) out += rational_str(re_);
  if (sgn(im_) != 0) {
    if (sgn(im_) > 0 && !out.empty()) out += "+";
    out += rational_str(im_);
    out += "i";
  }
  return out;
}

Scalar Scalar::parse(std::string_view text, Field f) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.empty()) throw ParseError("empty scalar literal");

  // Split at a sign that separates the real and imaginary terms.
  std::size_t split = std::string::npos;
  for (std::size_t p = 1; p < compact.size(); ++p) {
    if ((compact[p] == '+' || compact[p] == '-') && compact[p - 1] != '/' &&
        compact[p - 1] != '+' && compact[p - 1] != '-')
      split = p;
  }

  mpq_class re, im;
  bool has_im = compact.back() == 'i';
  if (!has_im && split != std::string::npos)
    throw ParseError("two terms but no imaginary unit in '" + std::string(text) + "'");

  auto parse_im_term = [](std::string term) {
    term.pop_back(); // trailing 'i'
    if (term.empty() || term == "+") return mpq_class(1);
    if (term == "-") return mpq_class(-1);
    return parse_rational(term);
  };

  if (!has_im) {
    re = parse_rational(compact);
  } else if (split == std::string::npos) {
    im = parse_im_term(compact);
  } else {
    re = parse_rational(compact.substr(0, split));
    im = parse_im_term(compact.substr(split));
  }

  if (sgn(im) != 0 && f == Field::Q)
    throw FieldMismatchError("imaginary literal '" + std::string(text) + "' in field Q");
  Scalar s;
  s.field_ = f;
  s.re_ = std::move(re);
  s.im_ = std::move(im);
  return s;
}

} // namespace curvspace
