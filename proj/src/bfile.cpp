#include "catode/bfile.hpp"

#include <charconv>
#include <optional>
#include <string>

#include "catode/catalan.hpp"

namespace catode {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

std::string_view strip(std::string_view s)
{
    while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
    }
    while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
    }
    return s;
}

std::string_view next_token(std::string_view& rest)
{
    std::size_t end = 0;
    while (end < rest.size() && !is_space(rest[end])) {
        ++end;
    }
    const std::string_view token = rest.substr(0, end);
    rest = strip(rest.substr(end));
    return token;
}

std::optional<Integer> parse_integer(std::string_view token)
{
    std::string_view digits = token;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (digits.empty()) {
        return std::nullopt;
    }
    for (char c : digits) {
        if (c < '0' || c > '9') {
            return std::nullopt;
        }
    }
    if (token.front() == '+') {
        token.remove_prefix(1);
    }
    return Integer(std::string(token), 10);
}

}  // namespace

BFileError::BFileError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
{
}

std::vector<BFileEntry> parse_bfile(std::string_view content)
{
    std::vector<BFileEntry> entries;
    std::size_t line_no = 0;
    while (!content.empty()) {
        const std::size_t eol = content.find('\n');
        std::string_view line = content.substr(0, eol);
        content = eol == std::string_view::npos ? std::string_view{} : content.substr(eol + 1);
        ++line_no;

        line = strip(line);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        std::string_view rest = line;
        const std::string_view index_text = next_token(rest);
        const std::string_view value_text = next_token(rest);
        if (value_text.empty() || !rest.empty()) {
            throw BFileError(line_no, "expected '<index> <value>'");
        }
        long long index = 0;
        const auto [ptr, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
        if (ec != std::errc{} || ptr != index_text.data() + index_text.size()) {
            throw BFileError(line_no, "malformed index '" + std::string(index_text) + "'");
        }
        auto value = parse_integer(value_text);
        if (!value) {
            throw BFileError(line_no, "malformed value '" + std::string(value_text) + "'");
        }
        if (!entries.empty() && index <= entries.back().index) {
            throw BFileError(line_no, "index " + std::to_string(index) + " does not increase");
        }
        entries.push_back({index, std::move(*value)});
    }
    return entries;
}

CrosscheckResult crosscheck_catalan(const std::vector<BFileEntry>& entries, unsigned long max_index)
{
    CrosscheckResult result;
    for (const auto& e : entries) {
        if (e.index < 0 || static_cast<unsigned long long>(e.index) > max_index) {
            continue;
        }
        ++result.checked;
        const Integer expected = catalan_closed(static_cast<unsigned long>(e.index));
        if (expected != e.value) {
            result.mismatches.push_back({e.index, expected, e.value});
        }
    }
    return result;
}

}  // namespace catode
