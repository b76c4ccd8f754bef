#include "periodgeom/scalar.hpp"

#include <cctype>
#include <sstream>

namespace periodgeom {

namespace {

bool valid_rational_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  bool digits = false, slash = false, digits_after = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (slash ? digits_after : digits) = true;
    } else if (c == '/' && !slash && digits) {
      slash = true;
    } else {
      return false;
    }
  }
  return digits && (!slash || digits_after);
}

}  // namespace

std::string to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string to_string(const RatComplex& z) {
  if (z.imag().is_zero()) return to_string(z.real());
  std::string im;
  if (z.imag() == Rat(1)) {
    im = "i";
  } else if (z.imag() == Rat(-1)) {
    im = "-i";
  } else {
    im = to_string(z.imag()) + "i";
  }
  if (z.real().is_zero()) return im;
  if (z.imag().sign() > 0) return to_string(z.real()) + "+" + im;
  return to_string(z.real()) + im;
}

Rat parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (!valid_rational_text(s)) throw FormatError("bad rational '" + text + "'");
  if (s[0] == '+') s.erase(0, 1);  // cpp_int rejects an explicit plus
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt(s), BigInt(1));
  BigInt den(s.substr(slash + 1));
  if (den == 0) throw FormatError("zero denominator in '" + text + "'");
  return Rat(BigInt(s.substr(0, slash)), den);
}

RatComplex parse_rational_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw FormatError("empty complex rational");
  if (s.back() != 'i') return RatComplex(parse_rational(s));

  std::string body = s.substr(0, s.size() - 1);
  // Split at the last top-level sign; signs at position 0 or right after '/'
  // belong to the component itself.
  std::size_t split = std::string::npos;
  for (std::size_t j = body.size(); j-- > 1;) {
    if ((body[j] == '+' || body[j] == '-') && body[j - 1] != '/') {
      split = j;
      break;
    }
  }
  std::string re_part, im_part;
  if (split == std::string::npos) {
    im_part = body;
  } else {
    re_part = body.substr(0, split);
    im_part = body.substr(split);
  }
  Rat im;
  if (im_part.empty() || im_part == "+") {
    im = Rat(1);
  } else if (im_part == "-") {
    im = Rat(-1);
  } else {
    im = parse_rational(im_part);
  }
  Rat re = re_part.empty() ? Rat(0) : parse_rational(re_part);
  return {re, im};
}

}  // namespace periodgeom
