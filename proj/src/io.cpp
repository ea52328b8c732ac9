#include "smti/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "smti/gs.hpp" // SplitMix64

namespace smti::io {

namespace {

// One line of the file with comments stripped, plus its 1-based number.
struct Line {
    std::string text;
    int number = 0;
};

std::vector<Line> significantLines(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view raw = text.substr(
            start, end == std::string_view::npos ? std::string_view::npos : end - start);
        ++number;
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;

        std::string line(raw);
        if (std::size_t hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                                 line.back() == '\r'))
            line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        lines.push_back({line, number});
    }
    return lines;
}

// Cursor over one line; all errors carry (line, column).
class LineCursor {
public:
    LineCursor(const Line& line) : line_(line) {}

    void skipSpaces() {
        while (pos_ < line_.text.size() &&
               (line_.text[pos_] == ' ' || line_.text[pos_] == '\t'))
            ++pos_;
    }

    bool atEnd() {
        skipSpaces();
        return pos_ >= line_.text.size();
    }

    char peek() {
        skipSpaces();
        return pos_ < line_.text.size() ? line_.text[pos_] : '\0';
    }

    void expect(char c, const std::string& what) {
        skipSpaces();
        if (pos_ >= line_.text.size() || line_.text[pos_] != c)
            fail("expected " + what);
        ++pos_;
    }

    int integer(const std::string& what) {
        skipSpaces();
        int value = 0;
        auto begin = line_.text.data() + pos_;
        auto end = line_.text.data() + line_.text.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr == begin) fail("expected " + what);
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    std::string word() {
        skipSpaces();
        std::size_t begin = pos_;
        while (pos_ < line_.text.size() && !std::isspace(static_cast<unsigned char>(
                                               line_.text[pos_])))
            ++pos_;
        return line_.text.substr(begin, pos_ - begin);
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, line_.number, static_cast<int>(pos_) + 1);
    }

private:
    const Line& line_;
    std::size_t pos_ = 0;
};

// Parses the parenthesized tie-groups on a person line. `pair` selects the
// three-sided "i,j" entry form.
template <typename Entry>
std::vector<std::vector<Entry>> parseGroups(LineCursor& cursor, bool pair) {
    std::vector<std::vector<Entry>> groups;
    while (!cursor.atEnd()) {
        cursor.expect('(', "'(' starting a tie-group");
        std::vector<Entry> group;
        while (cursor.peek() != ')') {
            if constexpr (std::is_same_v<Entry, int>) {
                (void)pair;
                group.push_back(cursor.integer("a partner index"));
            } else {
                Entry e;
                e.first = cursor.integer("a partner index");
                cursor.expect(',', "',' inside a partner pair");
                e.second = cursor.integer("a partner index");
                group.push_back(e);
            }
        }
        cursor.expect(')', "')'");
        groups.push_back(std::move(group));
    }
    if (groups.empty()) groups.push_back({}); // no groups = nobody acceptable
    return groups;
}

struct Header {
    bool threeSided = false;
    int men = 0;
    int women = 0;
    int children = 0;
};

Header parseHeader(const std::vector<Line>& lines, std::size_t& at) {
    if (lines.empty()) throw ParseError("empty instance file", 1, 1);
    Header h;
    {
        LineCursor cursor(lines[at]);
        std::string kind = cursor.word();
        if (kind == "smti")
            h.threeSided = false;
        else if (kind == "smti3")
            h.threeSided = true;
        else
            cursor.fail("expected header 'smti' or 'smti3'");
        if (!cursor.atEnd()) cursor.fail("unexpected text after header");
        ++at;
    }
    auto countLine = [&](const std::string& keyword) {
        if (at >= lines.size())
            throw ParseError("missing '" + keyword + " N' line",
                             lines.back().number + 1, 1);
        LineCursor cursor(lines[at]);
        if (cursor.word() != keyword) cursor.fail("expected '" + keyword + " N'");
        int value = cursor.integer("a count");
        if (value < 0) cursor.fail("count must be nonnegative");
        if (!cursor.atEnd()) cursor.fail("unexpected text after count");
        ++at;
        return value;
    };
    h.men = countLine("men");
    h.women = countLine("women");
    if (h.threeSided) h.children = countLine("children");
    return h;
}

// Person-line dispatch shared by both kinds: calls sink(tag, index, cursor)
// with the cursor sitting right after the ':'.
template <typename Sink>
void parsePersonLines(const std::vector<Line>& lines, std::size_t at, Sink sink) {
    for (; at < lines.size(); ++at) {
        LineCursor cursor(lines[at]);
        std::string tag = cursor.word();
        if (tag != "m" && tag != "w" && tag != "c")
            cursor.fail("expected a person line starting with m, w or c");
        int index = cursor.integer("a person index");
        cursor.expect(':', "':' before the tie-groups");
        sink(tag[0], index, cursor);
    }
}

} // namespace

AnyInstance parseInstanceText(std::string_view text) {
    std::vector<Line> lines = significantLines(text);
    std::size_t at = 0;
    Header h = parseHeader(lines, at);

    if (!h.threeSided) {
        Instance inst;
        inst.men.resize(static_cast<std::size_t>(h.men));
        inst.women.resize(static_cast<std::size_t>(h.women));
        std::vector<bool> seenMan(static_cast<std::size_t>(h.men) + 1, false);
        std::vector<bool> seenWoman(static_cast<std::size_t>(h.women) + 1, false);

        parsePersonLines(lines, at, [&](char tag, int index, LineCursor& cursor) {
            if (tag == 'c') cursor.fail("'c' lines are only valid in smti3 files");
            bool isMan = tag == 'm';
            int limit = isMan ? h.men : h.women;
            if (index < 1 || index > limit)
                cursor.fail("person index out of range 1.." + std::to_string(limit));
            auto& seen = isMan ? seenMan : seenWoman;
            if (seen[static_cast<std::size_t>(index)])
                cursor.fail("duplicate preference line for this person");
            seen[static_cast<std::size_t>(index)] = true;
            PreferenceList list;
            list.groups = parseGroups<int>(cursor, false);
            (isMan ? inst.men : inst.women)[static_cast<std::size_t>(index - 1)] =
                std::move(list);
        });

        for (int i = 1; i <= h.men; ++i)
            if (!seenMan[static_cast<std::size_t>(i)])
                throw ParseError("missing preference line for m" + std::to_string(i),
                                 lines.back().number, 1);
        for (int j = 1; j <= h.women; ++j)
            if (!seenWoman[static_cast<std::size_t>(j)])
                throw ParseError("missing preference line for w" + std::to_string(j),
                                 lines.back().number, 1);
        inst.validate();
        return inst;
    }

    threedim::Instance3 inst;
    inst.men.resize(static_cast<std::size_t>(h.men));
    inst.women.resize(static_cast<std::size_t>(h.women));
    inst.children.resize(static_cast<std::size_t>(h.children));
    std::vector<std::vector<bool>> seen = {
        std::vector<bool>(static_cast<std::size_t>(h.men) + 1, false),
        std::vector<bool>(static_cast<std::size_t>(h.women) + 1, false),
        std::vector<bool>(static_cast<std::size_t>(h.children) + 1, false),
    };

    parsePersonLines(lines, at, [&](char tag, int index, LineCursor& cursor) {
        int which = tag == 'm' ? 0 : tag == 'w' ? 1 : 2;
        int limit = which == 0 ? h.men : which == 1 ? h.women : h.children;
        if (index < 1 || index > limit)
            cursor.fail("person index out of range 1.." + std::to_string(limit));
        if (seen[static_cast<std::size_t>(which)][static_cast<std::size_t>(index)])
            cursor.fail("duplicate preference line for this person");
        seen[static_cast<std::size_t>(which)][static_cast<std::size_t>(index)] = true;
        threedim::PairPreferenceList list;
        list.groups = parseGroups<threedim::PartnerPair>(cursor, true);
        auto& side = which == 0 ? inst.men : which == 1 ? inst.women : inst.children;
        side[static_cast<std::size_t>(index - 1)] = std::move(list);
    });

    const char* tags = "mwc";
    for (int which = 0; which < 3; ++which) {
        int limit = which == 0 ? h.men : which == 1 ? h.women : h.children;
        for (int i = 1; i <= limit; ++i)
            if (!seen[static_cast<std::size_t>(which)][static_cast<std::size_t>(i)])
                throw ParseError(std::string("missing preference line for ") +
                                     tags[which] + std::to_string(i),
                                 lines.back().number, 1);
    }
    inst.validate();
    return inst;
}

namespace {

void writeGroups(std::ostringstream& out, const std::vector<std::vector<int>>& groups) {
    for (const auto& group : groups) {
        out << " (";
        for (std::size_t t = 0; t < group.size(); ++t) {
            if (t != 0) out << ' ';
            out << group[t];
        }
        out << ')';
    }
}

void writeGroups(std::ostringstream& out,
                 const std::vector<std::vector<threedim::PartnerPair>>& groups) {
    for (const auto& group : groups) {
        out << " (";
        for (std::size_t t = 0; t < group.size(); ++t) {
            if (t != 0) out << ' ';
            out << group[t].first << ',' << group[t].second;
        }
        out << ')';
    }
}

} // namespace

std::string serialize(const Instance& inst) {
    std::ostringstream out;
    out << "smti\n";
    out << "men " << inst.menCount() << "\n";
    out << "women " << inst.womenCount() << "\n";
    for (int i = 1; i <= inst.menCount(); ++i) {
        out << "m " << i << " :";
        writeGroups(out, inst.men[static_cast<std::size_t>(i - 1)].groups);
        out << "\n";
    }
    for (int j = 1; j <= inst.womenCount(); ++j) {
        out << "w " << j << " :";
        writeGroups(out, inst.women[static_cast<std::size_t>(j - 1)].groups);
        out << "\n";
    }
    return out.str();
}

std::string serialize(const threedim::Instance3& inst) {
    std::ostringstream out;
    out << "smti3\n";
    out << "men " << inst.menCount() << "\n";
    out << "women " << inst.womenCount() << "\n";
    out << "children " << inst.childrenCount() << "\n";
    auto side = [&](char tag, const std::vector<threedim::PairPreferenceList>& lists) {
        for (std::size_t i = 0; i < lists.size(); ++i) {
            out << tag << ' ' << i + 1 << " :";
            writeGroups(out, lists[i].groups);
            out << "\n";
        }
    };
    side('m', inst.men);
    side('w', inst.women);
    side('c', inst.children);
    return out.str();
}

AnyInstance loadInstanceFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read instance file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parseInstanceText(buffer.str());
}

namespace {

// The shared list-building scheme behind both generators; `universe` is the
// candidate partner list in its canonical order. Draw order is fixed: one
// keep/drop draw per candidate, size-1 shuffle draws, size-1 tie draws, one
// neutral draw when anything survived.
template <typename Entry>
std::vector<std::vector<Entry>> generateGroups(const std::vector<Entry>& universe,
                                               double ties, double incompleteness,
                                               gs::SplitMix64& rng) {
    std::vector<Entry> kept;
    for (const Entry& candidate : universe)
        if (rng.nextUnit() >= incompleteness) kept.push_back(candidate);

    for (std::size_t i = kept.size(); i-- > 1;) {
        std::size_t j = static_cast<std::size_t>(rng.next() % (i + 1));
        std::swap(kept[i], kept[j]);
    }

    std::vector<std::vector<Entry>> groups;
    for (std::size_t t = 0; t < kept.size(); ++t) {
        if (t == 0 || rng.nextUnit() >= ties)
            groups.push_back({kept[t]});
        else
            groups.back().push_back(kept[t]);
    }
    if (kept.empty()) {
        groups.push_back({});
    } else if (rng.nextUnit() >= ties) {
        groups.push_back({}); // empty neutral group; otherwise the last
                              // formed group is the neutral one
    }
    for (auto& group : groups) std::sort(group.begin(), group.end());
    return groups;
}

void checkProbability(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0))
        throw ValidationError(std::string(name) + " must be in [0,1]");
}

} // namespace

Instance generateInstance(int n, int p, double ties, double incompleteness,
                          std::uint64_t seed) {
    if (n < 0 || p < 0) throw ValidationError("side sizes must be nonnegative");
    checkProbability(ties, "ties");
    checkProbability(incompleteness, "incompleteness");

    gs::SplitMix64 rng(seed);
    auto universeOf = [](int count) {
        std::vector<int> out;
        for (int t = 1; t <= count; ++t) out.push_back(t);
        return out;
    };

    Instance inst;
    for (int i = 0; i < n; ++i)
        inst.men.push_back({generateGroups(universeOf(p), ties, incompleteness, rng)});
    for (int j = 0; j < p; ++j)
        inst.women.push_back({generateGroups(universeOf(n), ties, incompleteness, rng)});
    inst.validate();
    return inst;
}

threedim::Instance3 generateInstance3(int n, int p, int r, double ties,
                                      double incompleteness, std::uint64_t seed) {
    if (n < 0 || p < 0 || r < 0) throw ValidationError("side sizes must be nonnegative");
    checkProbability(ties, "ties");
    checkProbability(incompleteness, "incompleteness");

    gs::SplitMix64 rng(seed);
    auto pairUniverse = [](int firstCount, int secondCount) {
        std::vector<threedim::PartnerPair> out;
        for (int a = 1; a <= firstCount; ++a)
            for (int b = 1; b <= secondCount; ++b)
                out.push_back(threedim::PartnerPair{a, b});
        return out;
    };

    threedim::Instance3 inst;
    for (int i = 0; i < n; ++i)
        inst.men.push_back(
            {generateGroups(pairUniverse(p, r), ties, incompleteness, rng)});
    for (int j = 0; j < p; ++j)
        inst.women.push_back(
            {generateGroups(pairUniverse(n, r), ties, incompleteness, rng)});
    for (int k = 0; k < r; ++k)
        inst.children.push_back(
            {generateGroups(pairUniverse(n, p), ties, incompleteness, rng)});
    inst.validate();
    return inst;
}

} // namespace smti::io
