#include "qhyp/analysis.hpp"

#include <fstream>
#include <sstream>

namespace qhyp {

namespace {

Real read_part(const std::string& mantissa, const std::string& exponent) {
    return parse_real(mantissa + "e" + exponent);
}

}  // namespace

std::vector<CachedSample> load_samples(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open sample cache: " + path);
    std::vector<CachedSample> rows;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        CachedSample s;
        std::string rm, re, im, ie;
        if (!(ss >> s.n >> s.a >> s.m >> rm >> re >> im >> ie))
            throw DomainError(path + ":" + std::to_string(lineno) + ": malformed sample row");
        s.value = Complex(read_part(rm, re), read_part(im, ie));
        rows.push_back(s);
    }
    return rows;
}

void save_samples(const std::string& path, const std::vector<CachedSample>& rows, int digits) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write sample cache: " + path);
    out << "# n a m re_mantissa re_exponent im_mantissa im_exponent\n";
    for (const CachedSample& s : rows) {
        DecimalString r = to_decimal(s.value.re, digits), i = to_decimal(s.value.im, digits);
        out << s.n << ' ' << s.a << ' ' << s.m << ' ' << r.mantissa << ' ' << r.exponent << ' ' << i.mantissa << ' '
            << i.exponent << '\n';
    }
    if (!out) throw DomainError("failed writing sample cache: " + path);
}

}  // namespace qhyp
