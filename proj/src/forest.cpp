#include "twistkit/forest.hpp"

#include "twistkit/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace twistkit
{

RootedTree RootedTree::bush(std::size_t leaves)
{
    RootedTree t;
    t.children.resize(leaves);
    return t;
}

std::size_t RootedTree::leaf_count() const noexcept
{
    if (children.empty())
        return 1;
    std::size_t n = 0;
    for (const auto& c : children)
        n += c.leaf_count();
    return n;
}

std::size_t RootedTree::vertex_count() const noexcept
{
    std::size_t n = 1;
    for (const auto& c : children)
        n += c.vertex_count();
    return n;
}

bool operator==(const RootedTree& a, const RootedTree& b)
{
    return a.children == b.children;
}

std::size_t RootedForest::dimension() const noexcept
{
    std::size_t n = 0;
    for (const auto& t : trees)
        n += t.leaf_count();
    return n;
}

void TwistWord::validate() const
{
    std::int64_t leaves = 1;
    for (std::size_t j = 0; j < steps.size(); ++j)
    {
        const auto& s = steps[j];
        if (s.twists < 1)
            throw Error(ErrorKind::InvalidInput, "twist count must be positive, got " + std::to_string(s.twists));
        if (s.leaf < 1 || s.leaf > leaves || (j == 0 && s.leaf != 1))
            throw Error(ErrorKind::InvalidLeafIndex,
                        "step " + std::to_string(j + 1) + " glues onto leaf " + std::to_string(s.leaf) +
                            " but the tree has " + std::to_string(leaves) + " leaves");
        leaves += s.twists;
    }
}

std::size_t TwistWord::dimension() const noexcept
{
    std::size_t n = 1;
    for (const auto& s : steps)
        n += static_cast<std::size_t>(s.twists);
    return n;
}

namespace
{

// Replaces the `index`-th leaf (0-based, left to right) by `graft`.
// Returns true once the replacement happened; `index` is consumed as leaves
// are passed.
bool graft_at_leaf(RootedTree& tree, std::size_t& index, const RootedTree& graft)
{
    if (tree.is_leaf())
    {
        if (index == 0)
        {
            tree = graft;
            return true;
        }
        --index;
        return false;
    }
    for (auto& c : tree.children)
        if (graft_at_leaf(c, index, graft))
            return true;
    return false;
}

} // namespace

RootedTree word_to_tree(const TwistWord& word)
{
    word.validate();
    if (word.steps.empty())
        return RootedTree::point();
    RootedTree tree = RootedTree::bush(static_cast<std::size_t>(word.steps[0].twists) + 1);
    for (std::size_t j = 1; j < word.steps.size(); ++j)
    {
        std::size_t index = static_cast<std::size_t>(word.steps[j].leaf - 1);
        graft_at_leaf(tree, index, RootedTree::bush(static_cast<std::size_t>(word.steps[j].twists) + 1));
    }
    return tree;
}

RootedForest product_to_forest(const ProductSpec& product)
{
    if (product.factors.empty())
        throw Error(ErrorKind::InvalidInput, "a product needs at least one factor");
    RootedForest f;
    for (const auto& w : product.factors)
        f.trees.push_back(word_to_tree(w));
    return f;
}

// --- parsing ---------------------------------------------------------------

namespace
{

class ForestParser
{
public:
    explicit ForestParser(std::string_view text) : text_(text) {}

    RootedForest forest()
    {
        RootedForest f;
        f.trees.push_back(tree());
        skip_space();
        while (peek() == '*')
        {
            ++pos_;
            f.trees.push_back(tree());
            skip_space();
        }
        expect_end({"'*'", "end of input"});
        return f;
    }

    RootedTree single_tree()
    {
        RootedTree t = tree();
        expect_end({"end of input"});
        return t;
    }

    TwistWord single_word()
    {
        skip_space();
        std::size_t start = pos_;
        if (identifier() != "twist")
            fail(start, {"'twist('"});
        TwistWord w = word_body();
        expect_end({"end of input"});
        return w;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(std::size_t at, std::vector<std::string> expected) const
    {
        std::string found;
        if (at < text_.size())
            found = std::string(1, text_[at]);
        throw ParseError(at, std::move(expected), found);
    }

    void expect_end(std::vector<std::string> expected)
    {
        skip_space();
        if (pos_ != text_.size())
            fail(pos_, std::move(expected));
    }

    std::string_view identifier()
    {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    void expect_char(char c)
    {
        skip_space();
        if (peek() != c)
            fail(pos_, {std::string("'") + c + "'"});
        ++pos_;
    }

    int integer()
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail(start, {"positive integer"});
        if (pos_ - start > 9)
            fail(start, {"integer below 10^9"});
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    RootedTree tree()
    {
        skip_space();
        std::size_t start = pos_;
        if (peek() == '(')
        {
            ++pos_;
            RootedTree t;
            t.children.push_back(tree());
            skip_space();
            while (peek() != ')')
            {
                if (pos_ >= text_.size())
                    fail(pos_, {"tree", "')'"});
                t.children.push_back(tree());
                skip_space();
            }
            ++pos_;
            return t;
        }
        auto rest = text_.substr(pos_);
        if (rest.starts_with("point"))
        {
            pos_ += 5;
            return RootedTree::point();
        }
        if (peek() == 'L')
        {
            ++pos_;
            return RootedTree::point();
        }
        if (rest.starts_with("twist"))
        {
            pos_ += 5;
            TwistWord w = word_body();
            try
            {
                return word_to_tree(w);
            }
            catch (const Error& e)
            {
                if (e.kind() == ErrorKind::InvalidLeafIndex)
                    throw Error(ErrorKind::InvalidLeafIndex,
                                std::string(e.what()) + " (word at byte " + std::to_string(start) + ")");
                throw;
            }
        }
        fail(start, {"'L'", "'point'", "'('", "'twist('"});
    }

    // Parses "(k1;k2@l2;...)" after the "twist" keyword.
    TwistWord word_body()
    {
        expect_char('(');
        TwistWord w;
        skip_space();
        if (peek() == ')')
        {
            ++pos_;
            return w;
        }
        w.steps.push_back({integer(), 1});
        skip_space();
        while (peek() == ';')
        {
            ++pos_;
            int k = integer();
            expect_char('@');
            int l = integer();
            w.steps.push_back({k, l});
            skip_space();
        }
        if (peek() != ')')
            fail(pos_, {"';'", "')'"});
        ++pos_;
        return w;
    }
};

} // namespace

RootedForest parse_forest(std::string_view text)
{
    return ForestParser(text).forest();
}

RootedTree parse_tree(std::string_view text)
{
    return ForestParser(text).single_tree();
}

TwistWord parse_word(std::string_view text)
{
    return ForestParser(text).single_word();
}

// --- printing --------------------------------------------------------------

namespace
{

void print_subtree(const RootedTree& t, std::string& out)
{
    if (t.is_leaf())
    {
        out += 'L';
        return;
    }
    out += '(';
    for (std::size_t i = 0; i < t.children.size(); ++i)
    {
        if (i > 0)
            out += ' ';
        print_subtree(t.children[i], out);
    }
    out += ')';
}

} // namespace

std::string print_tree(const RootedTree& tree)
{
    if (tree.is_leaf())
        return "point";
    std::string out;
    print_subtree(tree, out);
    return out;
}

std::string print_forest(const RootedForest& forest)
{
    std::string out;
    for (std::size_t i = 0; i < forest.trees.size(); ++i)
    {
        if (i > 0)
            out += " * ";
        out += print_tree(forest.trees[i]);
    }
    return out;
}

std::string print_word(const TwistWord& word)
{
    std::string out = "twist(";
    for (std::size_t j = 0; j < word.steps.size(); ++j)
    {
        if (j == 0)
            out += std::to_string(word.steps[j].twists);
        else
            out += ';' + std::to_string(word.steps[j].twists) + '@' + std::to_string(word.steps[j].leaf);
    }
    return out + ')';
}

// --- isomorphism -----------------------------------------------------------

std::string canonical_form(const RootedTree& tree)
{
    if (tree.is_leaf())
        return "()";
    std::vector<std::string> parts;
    parts.reserve(tree.children.size());
    for (const auto& c : tree.children)
        parts.push_back(canonical_form(c));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i)
    {
        if (i > 0)
            out += ',';
        out += parts[i];
    }
    return out + ')';
}

std::string canonical_form(const RootedForest& forest)
{
    std::vector<std::string> parts;
    for (const auto& t : forest.trees)
        parts.push_back(canonical_form(t));
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
    {
        if (i > 0)
            out += " * ";
        out += parts[i];
    }
    return out;
}

RootedTree tree_from_canonical(std::string_view canonical)
{
    std::size_t pos = 0;
    std::function<RootedTree()> node = [&]() -> RootedTree {
        if (pos >= canonical.size() || canonical[pos] != '(')
            throw ParseError(pos, {"'('"}, pos < canonical.size() ? std::string(1, canonical[pos]) : "");
        ++pos;
        RootedTree t;
        while (pos < canonical.size() && canonical[pos] != ')')
        {
            t.children.push_back(node());
            if (pos < canonical.size() && canonical[pos] == ',')
                ++pos;
        }
        if (pos >= canonical.size())
            throw ParseError(pos, {"')'"}, "");
        ++pos;
        return t;
    };
    RootedTree t = node();
    if (pos != canonical.size())
        throw ParseError(pos, {"end of input"}, std::string(1, canonical[pos]));
    return t;
}

bool is_isomorphic(const RootedTree& a, const RootedTree& b)
{
    return canonical_form(a) == canonical_form(b);
}

bool is_isomorphic(const RootedForest& a, const RootedForest& b)
{
    return a.trees.size() == b.trees.size() && canonical_form(a) == canonical_form(b);
}

bool is_ample(const RootedTree& tree)
{
    if (tree.is_leaf())
        return true;
    if (tree.children.size() < 2)
        return false;
    // Non-root inner vertices need degree >= 3, i.e. at least two children.
    std::function<bool(const RootedTree&)> inner_ok = [&](const RootedTree& t) {
        if (t.is_leaf())
            return true;
        if (t.children.size() < 2)
            return false;
        return std::all_of(t.children.begin(), t.children.end(), inner_ok);
    };
    return std::all_of(tree.children.begin(), tree.children.end(), inner_ok);
}

// --- enumeration -----------------------------------------------------------

namespace
{

// Canonical strings of all ample trees by leaf count, each list sorted.
class AmpleCatalog
{
public:
    const std::vector<std::string>& trees(int leaves)
    {
        while (static_cast<int>(by_size_.size()) <= leaves)
            extend();
        return by_size_[static_cast<std::size_t>(leaves)];
    }

private:
    std::vector<std::vector<std::string>> by_size_{{}, {"()"}};

    void extend()
    {
        const int n = static_cast<int>(by_size_.size());
        std::vector<std::string> out;
        std::vector<const std::string*> chosen;
        // Children are chosen in non-increasing (size, index) order so that
        // each multiset is produced once; sizes stay below n, forcing >= 2
        // children.
        std::function<void(int, int, std::size_t)> pick = [&](int remaining, int max_size, std::size_t max_index) {
            if (remaining == 0)
            {
                std::vector<std::string_view> sorted;
                sorted.reserve(chosen.size());
                for (auto* s : chosen)
                    sorted.emplace_back(*s);
                std::sort(sorted.begin(), sorted.end());
                std::string t = "(";
                for (std::size_t i = 0; i < sorted.size(); ++i)
                {
                    if (i > 0)
                        t += ',';
                    t += sorted[i];
                }
                t += ')';
                out.push_back(std::move(t));
                return;
            }
            for (int size = std::min(remaining, max_size); size >= 1; --size)
            {
                const auto& pool = by_size_[static_cast<std::size_t>(size)];
                std::size_t top = size == max_size ? std::min(max_index, pool.size() - 1) : pool.size() - 1;
                for (std::size_t idx = 0; idx <= top; ++idx)
                {
                    chosen.push_back(&pool[idx]);
                    pick(remaining - size, size, idx);
                    chosen.pop_back();
                }
            }
        };
        pick(n, n - 1, static_cast<std::size_t>(-1));
        std::sort(out.begin(), out.end());
        by_size_.push_back(std::move(out));
    }
};

} // namespace

std::vector<RootedTree> enumerate_ample_trees(int leaves, int cap)
{
    if (leaves < 1)
        throw Error(ErrorKind::InvalidInput, "leaf count must be positive");
    if (leaves > cap)
        throw Error(ErrorKind::CapExceeded,
                    "enumeration of " + std::to_string(leaves) + " leaves exceeds cap " + std::to_string(cap));
    AmpleCatalog catalog;
    const auto& strings = catalog.trees(leaves);
    std::vector<RootedTree> out;
    out.reserve(strings.size());
    for (const auto& s : strings)
        out.push_back(tree_from_canonical(s));
    return out;
}

Integer count_ample_trees(int leaves)
{
    if (leaves < 1)
        throw Error(ErrorKind::InvalidInput, "leaf count must be positive");
    std::vector<Integer> count(static_cast<std::size_t>(leaves) + 1, 0);
    count[1] = 1;
    for (int n = 2; n <= leaves; ++n)
    {
        // ways[s]: multisets of ample trees with sizes < n and total s.
        std::vector<Integer> ways(static_cast<std::size_t>(n) + 1, 0);
        ways[0] = 1;
        for (int size = 1; size < n; ++size)
        {
            const Integer& kinds = count[static_cast<std::size_t>(size)];
            std::vector<Integer> next = ways;
            // choose m >= 1 trees of this size: multichoose(kinds, m)
            for (int total = 0; total <= n; ++total)
            {
                if (ways[static_cast<std::size_t>(total)] == 0)
                    continue;
                Integer multichoose = 1;
                for (int m = 1; total + m * size <= n; ++m)
                {
                    multichoose = multichoose * (kinds + m - 1) / m;
                    next[static_cast<std::size_t>(total + m * size)] += ways[static_cast<std::size_t>(total)] * multichoose;
                }
            }
            ways = std::move(next);
        }
        count[static_cast<std::size_t>(n)] = ways[static_cast<std::size_t>(n)];
    }
    return count[static_cast<std::size_t>(leaves)];
}

} // namespace twistkit
