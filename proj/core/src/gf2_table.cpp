#include "ramsey/gf2.hpp"

#include "ramsey/errors.hpp"

namespace ramsey::gf2 {

namespace {

// One frozen modulus per degree: the smallest-a irreducible trinomial
// x^r + x^a + 1 when one exists, otherwise the first irreducible pentanomial
// x^r + x^a + x^b + x^c + 1 in (a,b,c) scan order. Every entry is checked by
// is_irreducible() in the test suite.
constexpr Modulus kTable[] = {
    {2, 1, 0, 0},
    {3, 1, 0, 0},
    {4, 1, 0, 0},
    {5, 2, 0, 0},
    {6, 1, 0, 0},
    {7, 1, 0, 0},
    {8, 4, 3, 1},
    {9, 1, 0, 0},
    {10, 3, 0, 0},
    {11, 2, 0, 0},
    {12, 3, 0, 0},
    {13, 4, 3, 1},
    {14, 5, 0, 0},
    {15, 1, 0, 0},
    {16, 5, 3, 1},
    {17, 3, 0, 0},
    {18, 3, 0, 0},
    {19, 5, 2, 1},
    {20, 3, 0, 0},
    {21, 2, 0, 0},
    {22, 1, 0, 0},
    {23, 5, 0, 0},
    {24, 4, 3, 1},
    {25, 3, 0, 0},
    {26, 4, 3, 1},
    {27, 5, 2, 1},
    {28, 1, 0, 0},
    {29, 2, 0, 0},
    {30, 1, 0, 0},
    {31, 3, 0, 0},
    {32, 7, 3, 2},
    {33, 10, 0, 0},
    {34, 7, 0, 0},
    {35, 2, 0, 0},
    {36, 9, 0, 0},
    {37, 6, 4, 1},
    {38, 6, 5, 1},
    {39, 4, 0, 0},
    {40, 5, 4, 3},
    {41, 3, 0, 0},
    {42, 7, 0, 0},
    {43, 6, 4, 3},
    {44, 5, 0, 0},
    {45, 4, 3, 1},
    {46, 1, 0, 0},
    {47, 5, 0, 0},
    {48, 5, 3, 2},
    {49, 9, 0, 0},
    {50, 4, 3, 2},
    {51, 6, 3, 1},
    {52, 3, 0, 0},
    {53, 6, 2, 1},
    {54, 9, 0, 0},
    {55, 7, 0, 0},
    {56, 7, 4, 2},
    {57, 4, 0, 0},
    {58, 19, 0, 0},
    {59, 7, 4, 2},
    {60, 1, 0, 0},
    {61, 5, 2, 1},
    {62, 29, 0, 0},
    {63, 1, 0, 0},
    {64, 4, 3, 1},
    {65, 18, 0, 0},
    {66, 3, 0, 0},
    {67, 5, 2, 1},
    {68, 9, 0, 0},
    {69, 6, 5, 2},
    {70, 5, 3, 1},
    {71, 6, 0, 0},
    {72, 10, 9, 3},
    {73, 25, 0, 0},
    {74, 35, 0, 0},
    {75, 6, 3, 1},
    {76, 21, 0, 0},
    {77, 6, 5, 2},
    {78, 6, 5, 3},
    {79, 9, 0, 0},
    {80, 9, 4, 2},
    {81, 4, 0, 0},
    {82, 8, 3, 1},
    {83, 7, 4, 2},
    {84, 5, 0, 0},
    {85, 8, 2, 1},
    {86, 21, 0, 0},
    {87, 13, 0, 0},
    {88, 7, 6, 2},
    {89, 38, 0, 0},
    {90, 27, 0, 0},
    {91, 8, 5, 1},
    {92, 21, 0, 0},
    {93, 2, 0, 0},
    {94, 21, 0, 0},
    {95, 11, 0, 0},
    {96, 10, 9, 6},
    {97, 6, 0, 0},
    {98, 11, 0, 0},
    {99, 6, 3, 1},
    {100, 15, 0, 0},
    {101, 7, 6, 1},
    {102, 29, 0, 0},
    {103, 9, 0, 0},
    {104, 4, 3, 1},
    {105, 4, 0, 0},
    {106, 15, 0, 0},
    {107, 9, 7, 4},
    {108, 17, 0, 0},
    {109, 5, 4, 2},
    {110, 33, 0, 0},
    {111, 10, 0, 0},
    {112, 5, 4, 3},
    {113, 9, 0, 0},
    {114, 5, 3, 2},
    {115, 8, 7, 5},
    {116, 4, 2, 1},
    {117, 5, 2, 1},
    {118, 33, 0, 0},
    {119, 8, 0, 0},
    {120, 4, 3, 1},
    {121, 18, 0, 0},
    {122, 6, 2, 1},
    {123, 2, 0, 0},
    {124, 19, 0, 0},
    {125, 7, 6, 5},
    {126, 21, 0, 0},
    {127, 1, 0, 0},
    {128, 7, 2, 1},
    {129, 5, 0, 0},
    {130, 3, 0, 0},
    {131, 8, 3, 2},
    {132, 17, 0, 0},
    {133, 9, 8, 2},
    {134, 57, 0, 0},
    {135, 11, 0, 0},
    {136, 5, 3, 2},
    {137, 21, 0, 0},
    {138, 8, 7, 1},
    {139, 8, 5, 3},
    {140, 15, 0, 0},
    {141, 10, 4, 1},
    {142, 21, 0, 0},
    {143, 5, 3, 2},
    {144, 7, 4, 2},
    {145, 52, 0, 0},
    {146, 71, 0, 0},
    {147, 14, 0, 0},
    {148, 27, 0, 0},
    {149, 10, 9, 7},
    {150, 53, 0, 0},
    {151, 3, 0, 0},
    {152, 6, 3, 2},
    {153, 1, 0, 0},
    {154, 15, 0, 0},
    {155, 62, 0, 0},
    {156, 9, 0, 0},
    {157, 6, 5, 2},
    {158, 8, 6, 5},
    {159, 31, 0, 0},
    {160, 5, 3, 2},
    {161, 18, 0, 0},
    {162, 27, 0, 0},
    {163, 7, 6, 3},
    {164, 10, 8, 7},
    {165, 9, 8, 3},
    {166, 37, 0, 0},
    {167, 6, 0, 0},
    {168, 15, 3, 2},
    {169, 34, 0, 0},
    {170, 11, 0, 0},
    {171, 6, 5, 2},
    {172, 1, 0, 0},
    {173, 8, 5, 2},
    {174, 13, 0, 0},
    {175, 6, 0, 0},
    {176, 11, 3, 2},
    {177, 8, 0, 0},
    {178, 31, 0, 0},
    {179, 4, 2, 1},
    {180, 3, 0, 0},
    {181, 7, 6, 1},
    {182, 81, 0, 0},
    {183, 56, 0, 0},
    {184, 9, 8, 7},
    {185, 24, 0, 0},
    {186, 11, 0, 0},
    {187, 7, 6, 5},
    {188, 6, 5, 2},
    {189, 6, 5, 2},
    {190, 8, 7, 6},
    {191, 9, 0, 0},
    {192, 7, 2, 1},
    {193, 15, 0, 0},
    {194, 87, 0, 0},
    {195, 8, 3, 2},
    {196, 3, 0, 0},
    {197, 9, 4, 2},
    {198, 9, 0, 0},
    {199, 34, 0, 0},
    {200, 5, 3, 2},
    {201, 14, 0, 0},
    {202, 55, 0, 0},
    {203, 8, 7, 1},
    {204, 27, 0, 0},
    {205, 9, 5, 2},
    {206, 10, 9, 5},
    {207, 43, 0, 0},
    {208, 9, 3, 1},
    {209, 6, 0, 0},
    {210, 7, 0, 0},
    {211, 11, 10, 8},
    {212, 105, 0, 0},
    {213, 6, 5, 2},
    {214, 73, 0, 0},
    {215, 23, 0, 0},
    {216, 7, 3, 1},
    {217, 45, 0, 0},
    {218, 11, 0, 0},
    {219, 8, 4, 1},
    {220, 7, 0, 0},
    {221, 8, 6, 2},
    {222, 5, 4, 2},
    {223, 33, 0, 0},
    {224, 9, 8, 3},
    {225, 32, 0, 0},
    {226, 10, 7, 3},
    {227, 10, 9, 4},
    {228, 113, 0, 0},
    {229, 10, 4, 1},
    {230, 8, 7, 6},
    {231, 26, 0, 0},
    {232, 9, 4, 2},
    {233, 74, 0, 0},
    {234, 31, 0, 0},
    {235, 9, 6, 1},
    {236, 5, 0, 0},
    {237, 7, 4, 1},
    {238, 73, 0, 0},
    {239, 36, 0, 0},
    {240, 8, 5, 3},
    {241, 70, 0, 0},
    {242, 95, 0, 0},
    {243, 8, 5, 1},
    {244, 111, 0, 0},
    {245, 6, 4, 1},
    {246, 11, 2, 1},
    {247, 82, 0, 0},
    {248, 15, 14, 10},
    {249, 35, 0, 0},
    {250, 103, 0, 0},
    {251, 7, 4, 2},
    {252, 15, 0, 0},
    {253, 46, 0, 0},
    {254, 7, 2, 1},
    {255, 52, 0, 0},
    {256, 10, 5, 2},
    {257, 12, 0, 0},
    {258, 71, 0, 0},
    {259, 10, 6, 2},
    {260, 15, 0, 0},
    {261, 7, 6, 4},
    {262, 9, 8, 4},
    {263, 93, 0, 0},
    {264, 9, 6, 2},
    {265, 42, 0, 0},
    {266, 47, 0, 0},
    {267, 8, 6, 3},
    {268, 25, 0, 0},
    {269, 7, 6, 1},
    {270, 53, 0, 0},
    {271, 58, 0, 0},
    {272, 9, 3, 2},
    {273, 23, 0, 0},
    {274, 67, 0, 0},
    {275, 11, 10, 9},
    {276, 63, 0, 0},
    {277, 12, 6, 3},
    {278, 5, 0, 0},
    {279, 5, 0, 0},
    {280, 9, 5, 2},
    {281, 93, 0, 0},
    {282, 35, 0, 0},
    {283, 12, 7, 5},
    {284, 53, 0, 0},
    {285, 10, 7, 5},
    {286, 69, 0, 0},
    {287, 71, 0, 0},
    {288, 11, 10, 1},
    {289, 21, 0, 0},
    {290, 5, 3, 2},
    {291, 12, 11, 5},
    {292, 37, 0, 0},
    {293, 11, 6, 1},
    {294, 33, 0, 0},
    {295, 48, 0, 0},
    {296, 7, 3, 2},
    {297, 5, 0, 0},
    {298, 11, 8, 4},
    {299, 11, 6, 4},
    {300, 5, 0, 0},
    {301, 9, 5, 2},
    {302, 41, 0, 0},
    {303, 1, 0, 0},
    {304, 11, 2, 1},
    {305, 102, 0, 0},
    {306, 7, 3, 1},
    {307, 8, 4, 2},
    {308, 15, 0, 0},
    {309, 10, 6, 4},
    {310, 93, 0, 0},
    {311, 7, 5, 3},
    {312, 9, 7, 4},
    {313, 79, 0, 0},
    {314, 15, 0, 0},
    {315, 10, 9, 1},
    {316, 63, 0, 0},
    {317, 7, 4, 2},
    {318, 45, 0, 0},
    {319, 36, 0, 0},
    {320, 4, 3, 1},
    {321, 31, 0, 0},
    {322, 67, 0, 0},
    {323, 10, 3, 1},
    {324, 51, 0, 0},
    {325, 10, 5, 2},
    {326, 10, 3, 1},
    {327, 34, 0, 0},
    {328, 8, 3, 1},
    {329, 50, 0, 0},
    {330, 99, 0, 0},
    {331, 10, 6, 2},
    {332, 89, 0, 0},
    {333, 2, 0, 0},
    {334, 5, 2, 1},
    {335, 10, 7, 2},
    {336, 7, 4, 1},
    {337, 55, 0, 0},
    {338, 4, 3, 1},
    {339, 16, 10, 7},
    {340, 45, 0, 0},
    {341, 10, 8, 6},
    {342, 125, 0, 0},
    {343, 75, 0, 0},
    {344, 7, 2, 1},
    {345, 22, 0, 0},
    {346, 63, 0, 0},
    {347, 11, 10, 3},
    {348, 103, 0, 0},
    {349, 6, 5, 2},
    {350, 53, 0, 0},
    {351, 34, 0, 0},
    {352, 13, 11, 6},
    {353, 69, 0, 0},
    {354, 99, 0, 0},
    {355, 6, 5, 1},
    {356, 10, 9, 7},
    {357, 11, 10, 2},
    {358, 57, 0, 0},
    {359, 68, 0, 0},
    {360, 5, 3, 2},
    {361, 7, 4, 1},
    {362, 63, 0, 0},
    {363, 8, 5, 3},
    {364, 9, 0, 0},
    {365, 9, 6, 5},
    {366, 29, 0, 0},
    {367, 21, 0, 0},
    {368, 7, 3, 2},
    {369, 91, 0, 0},
    {370, 139, 0, 0},
    {371, 8, 3, 2},
    {372, 111, 0, 0},
    {373, 8, 7, 2},
    {374, 8, 6, 5},
    {375, 16, 0, 0},
    {376, 8, 7, 5},
    {377, 41, 0, 0},
    {378, 43, 0, 0},
    {379, 10, 8, 5},
    {380, 47, 0, 0},
    {381, 5, 2, 1},
    {382, 81, 0, 0},
    {383, 90, 0, 0},
    {384, 12, 3, 2},
    {385, 6, 0, 0},
    {386, 83, 0, 0},
    {387, 8, 7, 1},
    {388, 159, 0, 0},
    {389, 10, 9, 5},
    {390, 9, 0, 0},
    {391, 28, 0, 0},
    {392, 13, 10, 6},
    {393, 7, 0, 0},
    {394, 135, 0, 0},
    {395, 11, 6, 5},
    {396, 25, 0, 0},
    {397, 12, 7, 6},
    {398, 7, 6, 2},
    {399, 26, 0, 0},
    {400, 5, 3, 2},
    {401, 152, 0, 0},
    {402, 171, 0, 0},
    {403, 9, 8, 5},
    {404, 65, 0, 0},
    {405, 13, 8, 2},
    {406, 141, 0, 0},
    {407, 71, 0, 0},
    {408, 5, 3, 2},
    {409, 87, 0, 0},
    {410, 10, 4, 3},
    {411, 12, 10, 3},
    {412, 147, 0, 0},
    {413, 10, 7, 6},
    {414, 13, 0, 0},
    {415, 102, 0, 0},
    {416, 9, 5, 2},
    {417, 107, 0, 0},
    {418, 199, 0, 0},
    {419, 15, 5, 4},
    {420, 7, 0, 0},
    {421, 5, 4, 2},
    {422, 149, 0, 0},
    {423, 25, 0, 0},
    {424, 9, 7, 2},
    {425, 12, 0, 0},
    {426, 63, 0, 0},
    {427, 11, 6, 5},
    {428, 105, 0, 0},
    {429, 10, 8, 7},
    {430, 14, 6, 1},
    {431, 120, 0, 0},
    {432, 13, 4, 3},
    {433, 33, 0, 0},
    {434, 12, 11, 5},
    {435, 12, 9, 5},
    {436, 165, 0, 0},
    {437, 6, 2, 1},
    {438, 65, 0, 0},
    {439, 49, 0, 0},
    {440, 4, 3, 1},
    {441, 7, 0, 0},
    {442, 7, 5, 2},
    {443, 10, 6, 1},
    {444, 81, 0, 0},
    {445, 7, 6, 4},
    {446, 105, 0, 0},
    {447, 73, 0, 0},
    {448, 11, 6, 4},
    {449, 134, 0, 0},
    {450, 47, 0, 0},
    {451, 16, 10, 1},
    {452, 6, 5, 4},
    {453, 15, 6, 4},
    {454, 8, 6, 1},
    {455, 38, 0, 0},
    {456, 18, 9, 6},
    {457, 16, 0, 0},
    {458, 203, 0, 0},
    {459, 12, 5, 2},
    {460, 19, 0, 0},
    {461, 7, 6, 1},
    {462, 73, 0, 0},
    {463, 93, 0, 0},
    {464, 19, 18, 13},
    {465, 31, 0, 0},
    {466, 14, 11, 6},
    {467, 11, 6, 1},
    {468, 27, 0, 0},
    {469, 9, 5, 2},
    {470, 9, 0, 0},
    {471, 1, 0, 0},
    {472, 11, 3, 2},
    {473, 200, 0, 0},
    {474, 191, 0, 0},
    {475, 9, 8, 4},
    {476, 9, 0, 0},
    {477, 16, 15, 7},
    {478, 121, 0, 0},
    {479, 104, 0, 0},
    {480, 15, 9, 6},
    {481, 138, 0, 0},
    {482, 9, 6, 5},
    {483, 9, 6, 4},
    {484, 105, 0, 0},
    {485, 17, 16, 6},
    {486, 81, 0, 0},
    {487, 94, 0, 0},
    {488, 4, 3, 1},
    {489, 83, 0, 0},
    {490, 219, 0, 0},
    {491, 11, 6, 3},
    {492, 7, 0, 0},
    {493, 10, 5, 3},
    {494, 17, 0, 0},
    {495, 76, 0, 0},
    {496, 16, 5, 2},
    {497, 78, 0, 0},
    {498, 155, 0, 0},
    {499, 11, 6, 5},
    {500, 27, 0, 0},
    {501, 5, 4, 2},
    {502, 8, 5, 4},
    {503, 3, 0, 0},
    {504, 15, 14, 6},
    {505, 156, 0, 0},
    {506, 23, 0, 0},
    {507, 13, 6, 3},
    {508, 9, 0, 0},
    {509, 8, 7, 3},
    {510, 69, 0, 0},
    {511, 10, 0, 0},
    {512, 8, 5, 2},
};

}  // namespace

const Modulus& irreducible_modulus(int r) {
  if (r < 2 || r > kMaxFieldDegree)
    throw CapacityError("no frozen modulus for GF(2^" + std::to_string(r) +
                        "); supported degrees are 2.." + std::to_string(kMaxFieldDegree));
  return kTable[r - 2];
}

}  // namespace ramsey::gf2
