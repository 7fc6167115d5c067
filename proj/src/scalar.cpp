#include "gospace/scalar.hpp"

#include <cctype>
#include <optional>
#include <ostream>

namespace gospace {

std::string to_string(Field f) {
  return f == Field::rational ? "rational" : "gaussian";
}

Field field_from_string(std::string_view s) {
  if (s == "rational") return Field::rational;
  if (s == "gaussian") return Field::gaussian;
  throw ParseError("unknown field '" + std::string(s) + "'");
}

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar &Scalar::operator+=(const Scalar &o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar &Scalar::operator*=(const Scalar &o) {
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

Scalar &Scalar::operator/=(const Scalar &o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ /= o.re_;
    return *this;
  }
  // (a+bi)/(c+di) = (a+bi)(c-di) / (c^2+d^2)
  const mpq_class n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

namespace {

// Recursive-descent reader over the scalar grammar.
class Reader {
public:
  explicit Reader(std::string_view s) : s_(s) {}

  bool done() const { return pos_ == s_.size(); }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  std::optional<mpq_class> rational() {
    auto num = digits();
    if (!num) return std::nullopt;
    mpz_class den = 1;
    if (accept('/')) {
      auto d = digits();
      if (!d) fail("expected digits after '/'");
      den = *d;
      if (den == 0) fail("zero denominator");
    }
    mpq_class q(*num, den);
    q.canonicalize();
    return q;
  }

  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError("bad scalar '" + std::string(s_) + "': " + what);
  }

private:
  std::optional<mpz_class> digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) return std::nullopt;
    return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  Reader r(text);
  if (r.done()) r.fail("empty");

  const bool neg = r.accept('-');
  auto first = r.rational();

  // Pure imaginary: "-i", "3/4i", "2*i".
  if (r.peek('*') || r.peek('i')) {
    r.accept('*');
    if (!r.accept('i') || !r.done()) r.fail("expected trailing 'i'");
    mpq_class im = first ? *first : mpq_class(1);
    return Scalar(mpq_class(0), neg ? mpq_class(-im) : im);
  }
  if (!first) r.fail("expected digits");
  mpq_class re = neg ? mpq_class(-*first) : *first;
  if (r.done()) return Scalar(re);

  bool im_neg = false;
  if (r.accept('-')) {
    im_neg = true;
  } else if (!r.accept('+')) {
    r.fail("unexpected character");
  }
  auto second = r.rational();
  r.accept('*');
  if (!r.accept('i') || !r.done()) r.fail("expected trailing 'i'");
  mpq_class im = second ? *second : mpq_class(1);
  return Scalar(re, im_neg ? mpq_class(-im) : im);
}

std::string Scalar::to_string() const {
  const bool has_re = sgn(re_) != 0;
  const bool has_im = sgn(im_) != 0;
  if (!has_im) return re_.get_str();

  std::string out;
  if (has_re) out = re_.get_str();
  mpq_class mag = abs(im_);
  if (sgn(im_) < 0) {
    out += '-';
  } else if (has_re) {
    out += '+';
  }
  if (mag != 1) out += mag.get_str();
  out += 'i';
  return out;
}

std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.to_string(); }

}  // namespace gospace
