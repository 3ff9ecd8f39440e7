#include "kcca/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "kcca/errors.hpp"

namespace kcca {

namespace {

long long stem_of(Scalar v, Scalar unit10) { return static_cast<long long>(std::floor(v / unit10)); }

int leaf_of(Scalar v, Scalar unit, long long stem) {
    const long long k = static_cast<long long>(std::floor(v / unit));
    long long d = k - 10 * stem;
    if (d < 0) d = 0;
    if (d > 9) d = 9;
    return static_cast<int>(d);
}

int stem_count(const Vector& s, int e) {
    const Scalar unit10 = std::pow(10.0, e + 1);
    const long long lo = stem_of(s.minCoeff(), unit10);
    const long long hi = stem_of(s.maxCoeff(), unit10);
    return static_cast<int>(hi - lo + 1);
}

std::string format_header(int e) {
    const int pos = e + 1;
    std::ostringstream os;
    os << "The decimal point is ";
    if (pos == 0) {
        os << "at the |";
    } else {
        const int d = std::abs(pos);
        os << d << " digit" << (d == 1 ? "" : "s") << " to the "
           << (pos < 0 ? "left" : "right") << " of the |";
    }
    return os.str();
}

Scalar quantile7(std::vector<Scalar> sorted, Scalar p) {
    const size_t n = sorted.size();
    const Scalar h = p * static_cast<Scalar>(n - 1);
    const size_t lo = static_cast<size_t>(std::floor(h));
    const size_t hi = std::min(lo + 1, n - 1);
    const Scalar w = h - static_cast<Scalar>(lo);
    return sorted[lo] * (1 - w) + sorted[hi] * w;
}

}  // namespace

StemLeafDisplay stem_leaf(const Eigen::Ref<const Vector>& scores, int leaf_cap) {
    const Index n = scores.size();
    if (n < 1) fail(Errc::empty_input, "stem-and-leaf of empty score list");
    if (leaf_cap < 1) fail(Errc::invalid_argument, "leaf_cap must be positive");
    Vector s = scores;
    if (!s.allFinite()) fail(Errc::invalid_data, "non-finite scores");

    const Scalar vmin = s.minCoeff(), vmax = s.maxCoeff();
    int e;
    if (vmax > vmin) {
        // smallest leaf unit whose stems span at most ~40 rows
        e = static_cast<int>(std::floor(std::log10((vmax - vmin) / 40.0)));
        while (stem_count(s, e) > 40) ++e;
        while (e > -307 && stem_count(s, e - 1) <= 40) --e;
    } else {
        e = vmax == 0 ? 0 : static_cast<int>(std::floor(std::log10(std::abs(vmax)))) - 1;
    }

    const Scalar unit = std::pow(10.0, e);
    const Scalar unit10 = std::pow(10.0, e + 1);

    std::map<long long, std::vector<int>> groups;
    for (Index i = 0; i < n; ++i) {
        const long long st = stem_of(s(i), unit10);
        groups[st].push_back(leaf_of(s(i), unit, st));
    }

    StemLeafDisplay out;
    out.unit_exponent = e;
    out.leaf_cap = leaf_cap;
    out.header = format_header(e);
    for (auto& [st, leaves] : groups) {
        std::sort(leaves.begin(), leaves.end());
        StemLeafLine line;
        line.stem = st;
        for (int d : leaves) line.leaves.push_back(static_cast<char>('0' + d));
        line.overflow = static_cast<int>(leaves.size()) - leaf_cap;
        if (line.overflow < 0) line.overflow = 0;
        out.lines.push_back(std::move(line));
    }
    return out;
}

std::string StemLeafDisplay::render() const {
    std::ostringstream os;
    os << header << "\n\n";
    size_t width = 0;
    for (const auto& l : lines) width = std::max(width, std::to_string(l.stem).size());
    long long prev = 0;
    bool first = true;
    for (const auto& l : lines) {
        if (!first && l.stem > prev + 1) {
            for (size_t i = 0; i + 1 < width; ++i) os << ' ';
            os << "⋮\n";  // elided empty stems
        }
        std::string stem = std::to_string(l.stem);
        os << std::string(width - stem.size(), ' ') << stem << " | "
           << l.leaves.substr(0, static_cast<size_t>(leaf_cap));
        if (l.overflow > 0) os << "+" << l.overflow;
        os << "\n";
        prev = l.stem;
        first = false;
    }
    return os.str();
}

std::vector<Index> detect_outliers(const Eigen::Ref<const Vector>& scores) {
    const Index n = scores.size();
    if (n < 4) fail(Errc::insufficient_data, "outlier detection needs at least 4 scores");
    std::vector<Scalar> mag(static_cast<size_t>(n));
    for (Index i = 0; i < n; ++i) mag[static_cast<size_t>(i)] = std::abs(scores(i));
    std::vector<Scalar> sorted = mag;
    std::sort(sorted.begin(), sorted.end());
    const Scalar q1 = quantile7(sorted, 0.25);
    const Scalar q3 = quantile7(sorted, 0.75);
    const Scalar fence = q3 + 1.5 * (q3 - q1);

    std::vector<Index> out;
    for (Index i = 0; i < n; ++i)
        if (mag[static_cast<size_t>(i)] > fence) out.push_back(i);
    std::sort(out.begin(), out.end(), [&](Index a, Index b) {
        const Scalar ma = mag[static_cast<size_t>(a)], mb = mag[static_cast<size_t>(b)];
        return ma != mb ? ma > mb : a < b;
    });
    return out;
}

namespace {

std::string fmt(Scalar v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// nice tick positions covering [lo, hi]
std::vector<Scalar> ticks(Scalar lo, Scalar hi, int target = 5) {
    if (hi <= lo) hi = lo + 1;
    const Scalar raw = (hi - lo) / target;
    const Scalar mag = std::pow(10.0, std::floor(std::log10(raw)));
    Scalar step = mag;
    for (Scalar m : {1.0, 2.0, 5.0, 10.0}) {
        if (raw <= m * mag) {
            step = m * mag;
            break;
        }
    }
    std::vector<Scalar> out;
    for (Scalar t = std::ceil(lo / step) * step; t <= hi + step * 1e-9; t += step) out.push_back(t);
    return out;
}

}  // namespace

void index_plot(const Eigen::Ref<const Vector>& scores, const std::vector<int>* labels,
                const std::string& path) {
    const Index n = scores.size();
    if (n < 1) fail(Errc::empty_input, "index plot of empty score list");
    if (labels && static_cast<Index>(labels->size()) != n)
        fail(Errc::invalid_argument, "label count does not match score count");

    const int w = 800, h = 480, ml = 80, mr = 24, mt = 24, mb = 56;
    const Scalar ymin0 = scores.minCoeff(), ymax0 = scores.maxCoeff();
    const Scalar pad = ymax0 > ymin0 ? (ymax0 - ymin0) * 0.05 : std::max(std::abs(ymax0), 1.0) * 0.1;
    const Scalar ymin = ymin0 - pad, ymax = ymax0 + pad;
    const Scalar xmin = 0, xmax = std::max<Scalar>(1, static_cast<Scalar>(n - 1));

    auto sx = [&](Scalar v) { return ml + (v - xmin) / (xmax - xmin) * (w - ml - mr); };
    auto sy = [&](Scalar v) { return h - mb - (v - ymin) / (ymax - ymin) * (h - mt - mb); };

    static const char* fills[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
       << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";

    os << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr << "\" y2=\""
       << h - mb << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << h - mb
       << "\" stroke=\"black\"/>\n";

    for (Scalar t : ticks(xmin, xmax)) {
        const Scalar px = sx(t);
        os << "<line x1=\"" << fmt(px) << "\" y1=\"" << h - mb << "\" x2=\"" << fmt(px)
           << "\" y2=\"" << h - mb + 5 << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << fmt(px) << "\" y=\"" << h - mb + 20
           << "\" font-size=\"12\" text-anchor=\"middle\">" << fmt(t) << "</text>\n";
    }
    for (Scalar t : ticks(ymin, ymax)) {
        const Scalar py = sy(t);
        os << "<line x1=\"" << ml - 5 << "\" y1=\"" << fmt(py) << "\" x2=\"" << ml << "\" y2=\""
           << fmt(py) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << ml - 8 << "\" y=\"" << fmt(py + 4)
           << "\" font-size=\"12\" text-anchor=\"end\">" << fmt(t) << "</text>\n";
    }
    os << "<text x=\"" << (ml + w - mr) / 2 << "\" y=\"" << h - 12
       << "\" font-size=\"14\" text-anchor=\"middle\">observation</text>\n";
    os << "<text x=\"18\" y=\"" << (mt + h - mb) / 2
       << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
       << (mt + h - mb) / 2 << ")\">influence</text>\n";

    for (Index i = 0; i < n; ++i) {
        const int g = labels ? (*labels)[static_cast<size_t>(i)] : 0;
        const char* fill = fills[((g % 4) + 4) % 4];
        const Scalar px = sx(static_cast<Scalar>(i)), py = sy(scores(i));
        if (g % 2 == 0)
            os << "<circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(py)
               << "\" r=\"3\" fill=\"" << fill << "\"/>\n";
        else
            os << "<rect x=\"" << fmt(px - 3) << "\" y=\"" << fmt(py - 3)
               << "\" width=\"6\" height=\"6\" fill=\"" << fill << "\"/>\n";
    }
    os << "</svg>\n";

    std::ofstream f(path, std::ios::binary);
    if (!f) fail(Errc::io_error, "cannot open '" + path + "' for writing");
    f << os.str();
    if (!f) fail(Errc::io_error, "write failed for '" + path + "'");
}

}  // namespace kcca
