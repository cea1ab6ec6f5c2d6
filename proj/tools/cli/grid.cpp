#include "grid.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace divorient::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, sep))
        parts.push_back(part);
    return parts;
}

struct RangeText {
    std::string start, stop, step;
    bool is_range = false;
};

RangeText split_range(const std::string& item)
{
    RangeText r;
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
        r.start = item;
        return r;
    }
    r.is_range = true;
    r.start = item.substr(0, dots);
    const std::string rest = item.substr(dots + 2);
    const auto colon = rest.find(':');
    r.stop = rest.substr(0, colon);
    r.step = colon == std::string::npos ? "1" : rest.substr(colon + 1);
    return r;
}

std::uint64_t to_uint(const std::string& s)
{
    std::size_t used = 0;
    if (s.empty() || s[0] == '-')
        throw std::invalid_argument("grid: expected a nonnegative integer, got '" + s + "'");
    const auto v = std::stoull(s, &used);
    if (used != s.size())
        throw std::invalid_argument("grid: trailing characters in '" + s + "'");
    return v;
}

double to_real(const std::string& s)
{
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v))
        throw std::invalid_argument("grid: bad number '" + s + "'");
    return v;
}

}  // namespace

std::vector<std::uint32_t> parse_uint_grid(const std::string& text)
{
    std::vector<std::uint32_t> out;
    for (const auto& item : split(text, ',')) {
        if (item.empty())
            throw std::invalid_argument("grid: empty item in '" + text + "'");
        const RangeText r = split_range(item);
        const std::uint64_t start = to_uint(r.start);
        const std::uint64_t stop = r.is_range ? to_uint(r.stop) : start;
        const std::uint64_t step = r.is_range ? to_uint(r.step) : 1;
        if (step == 0 || stop < start)
            throw std::invalid_argument("grid: bad range '" + item + "'");
        if (stop > 0xFFFFFFFFull)
            throw std::invalid_argument("grid: value out of range in '" + item + "'");
        for (std::uint64_t v = start; v <= stop; v += step)
            out.push_back(static_cast<std::uint32_t>(v));
    }
    if (out.empty())
        throw std::invalid_argument("grid: no values");
    return out;
}

std::vector<double> parse_real_grid(const std::string& text)
{
    std::vector<double> out;
    for (const auto& item : split(text, ',')) {
        if (item.empty())
            throw std::invalid_argument("grid: empty item in '" + text + "'");
        const RangeText r = split_range(item);
        const double start = to_real(r.start);
        if (!r.is_range) {
            out.push_back(start);
            continue;
        }
        const double stop = to_real(r.stop);
        const double step = to_real(r.step);
        if (!(step > 0.0) || stop < start)
            throw std::invalid_argument("grid: bad range '" + item + "'");
        const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
        for (long i = 0; i <= count; ++i)
            out.push_back(start + static_cast<double>(i) * step);
    }
    if (out.empty())
        throw std::invalid_argument("grid: no values");
    return out;
}

}  // namespace divorient::cli
