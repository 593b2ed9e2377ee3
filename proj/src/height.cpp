#include "mt/height.hpp"

#include <cctype>

namespace mt {

namespace {

bool valid_int(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

height height::parse(const std::string& s) {
  if (s == "inf" || s == "+inf" || s == "infinity") return infinity();
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw std::invalid_argument("height: bad rational '" + s + "'");
    mpz_class d(den);
    if (sgn(d) == 0) throw std::invalid_argument("height: zero denominator in '" + s + "'");
    mpq_class q{mpz_class(num), d};
    q.canonicalize();
    return height(q);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (ip == "-" || ip == "+" || ip.empty()) ip += "0";
    if (!valid_int(ip) || fp.empty() || !valid_int(fp) || fp[0] == '-' || fp[0] == '+')
      throw std::invalid_argument("height: bad decimal '" + s + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    mpq_class q(mpz_class(ip) * scale + (neg ? -mpz_class(fp) : mpz_class(fp)), scale);
    q.canonicalize();
    return height(q);
  }
  if (!valid_int(s)) throw std::invalid_argument("height: bad value '" + s + "'");
  return height(mpq_class(mpz_class(s)));
}

std::string height::str() const {
  if (inf_) return "inf";
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace mt
