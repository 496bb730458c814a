#pragma once

#include <array>

namespace detmom {

/// Known exact fourth moments of a random determinant with Exp(1) entries,
/// n = 1..10. Kept as digit strings: the later entries do not fit in 64
/// bits.
inline constexpr std::array<const char*, 10> kExp1FourthMoments = {
    "24",
    "960",
    "51840",
    "3511872",
    "287953920",
    "27988001280",
    "3181325414400",
    "418846663065600",
    "63399549828464640",
    "10964925305310412800",
};

/// Known exact second moments of a random Gram determinant with Exp(1)
/// entries; row r is n - p = r, column c is p = c + 1 for p = 1..6.
inline constexpr std::array<std::array<const char*, 6>, 8>
    kExp1GramMoments = {{
        {"24", "960", "51840", "3511872", "287953920", "27988001280"},
        {"56", "3744", "297216", "27708480", "3004024320", "375698373120"},
        {"96", "9432", "1022400", "124675200", "17182609920",
         "2675406827520"},
        {"144", "19320", "2724480", "419207040", "71341240320",
         "13491506810880"},
        {"200", "34920", "6189120", "1169602560", "240336875520",
         "54144163584000"},
        {"264", "57960", "12579840", "2858913792", "696776048640",
         "184099283343360"},
        {"336", "90384", "23538816", "6325119360", "1801876285440",
         "551197391754240"},
        {"416", "134352", "41299200", "12939696000", "4256462960640",
         "1491202996208640"},
    }};

}  // namespace detmom
