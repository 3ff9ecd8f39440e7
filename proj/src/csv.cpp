#include "kcca/csv.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "kcca/errors.hpp"

namespace kcca {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

bool parse_number(const std::string& tok, Scalar& out) {
    if (tok.empty()) return false;
    char* end = nullptr;
    out = std::strtod(tok.c_str(), &end);
    return end == tok.c_str() + tok.size();
}

bool lower_eq(const std::string& a, const char* b) {
    size_t i = 0;
    for (; i < a.size() && b[i]; ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) != b[i]) return false;
    return i == a.size() && b[i] == '\0';
}

}  // namespace

DataView parse_csv(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(Errc::io_error, "cannot open '" + path + "'");

    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(f, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        rows.push_back(split_fields(line));
    }
    if (rows.empty()) fail(Errc::empty_input, "'" + path + "' contains no data");

    bool header = false;
    for (const auto& tok : rows[0]) {
        Scalar v;
        if (!parse_number(tok, v)) {
            header = true;
            break;
        }
    }
    const bool id_col = header && !rows[0].empty() && lower_eq(rows[0][0], "id");
    const size_t body_start = header ? 1 : 0;
    const size_t col_start = id_col ? 1 : 0;
    if (rows.size() <= body_start) fail(Errc::empty_input, "'" + path + "' has a header but no rows");

    const size_t width = rows[body_start].size();
    if (width <= col_start) fail(Errc::malformed_csv, "'" + path + "' has no numeric columns");
    if (header && rows[0].size() != width)
        fail(Errc::malformed_csv, "'" + path + "': header has " + std::to_string(rows[0].size()) +
                                      " fields, line 2 has " + std::to_string(width));

    DataView out;
    out.values.resize(static_cast<Index>(rows.size() - body_start), static_cast<Index>(width - col_start));
    for (size_t r = body_start; r < rows.size(); ++r) {
        const size_t lineno = r + 1;
        if (rows[r].size() != width)
            fail(Errc::malformed_csv, "'" + path + "': line " + std::to_string(lineno) + " has " +
                                          std::to_string(rows[r].size()) + " fields, expected " +
                                          std::to_string(width));
        if (id_col) out.row_ids.push_back(rows[r][0]);
        for (size_t c = col_start; c < width; ++c) {
            Scalar v;
            if (!parse_number(rows[r][c], v))
                fail(Errc::malformed_csv, "'" + path + "': line " + std::to_string(lineno) +
                                              ", column " + std::to_string(c + 1) + ": '" +
                                              rows[r][c] + "' is not a number");
            out.values(static_cast<Index>(r - body_start), static_cast<Index>(c - col_start)) = v;
        }
    }
    return out;
}

void write_csv(const std::string& path, const Eigen::Ref<const Matrix>& values,
               const std::vector<std::string>* col_names,
               const std::vector<std::string>* row_ids) {
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(Errc::io_error, "cannot open '" + path + "' for writing");
    if (row_ids && static_cast<Index>(row_ids->size()) != values.rows())
        fail(Errc::invalid_argument, "row id count mismatch");
    if (col_names) {
        std::string head;
        if (row_ids) head += "id,";
        for (size_t c = 0; c < col_names->size(); ++c) {
            if (c) head += ',';
            head += (*col_names)[c];
        }
        f << head << "\n";
    }
    char buf[40];
    for (Index r = 0; r < values.rows(); ++r) {
        std::string line;
        if (row_ids) {
            line += (*row_ids)[static_cast<size_t>(r)];
            line += ',';
        }
        for (Index c = 0; c < values.cols(); ++c) {
            if (c) line += ',';
            std::snprintf(buf, sizeof buf, "%.17g", values(r, c));
            line += buf;
        }
        f << line << "\n";
    }
    if (!f) fail(Errc::io_error, "write failed for '" + path + "'");
}

}  // namespace kcca
