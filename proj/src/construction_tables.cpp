#include "cdf/constructions.hpp"

// Sporadic base blocks and offset rows, transcribed block by block in the
// order they are printed. Entry (p, q) under L is p*t+q; under H it is
// (p*t+q)/2 and must be integral for every t of the listed parity. The
// comment on each line is the printed block.

namespace cdf::tables {
namespace {

constexpr SporadicTerm L(std::int64_t p, std::int64_t q) { return {p, q, 1}; }
constexpr SporadicTerm H(std::int64_t p, std::int64_t q) { return {p, q, 2}; }

// v = 72t+1, t odd (18 blocks)
constexpr SporadicBlock kOneMod72Odd[] = {
    {L(0, 0), L(0, 1), H(3, -1), L(11, -2)},  // {0,1,(3t-1)/2,11t-2}
    {L(0, 0), L(0, 2), L(3, -1), L(15, 0)},  // {0,2,3t-1,15t}
    {L(0, 0), L(3, -2), L(11, -1), L(35, -2)},  // {0,3t-2,11t-1,35t-2}
    {L(0, 0), L(4, -1), L(12, -1), L(27, -2)},  // {0,4t-1,12t-1,27t-2}
    {L(0, 0), H(3, 1), H(57, 3), H(71, -1)},  // {0,(3t+1)/2,(57t+3)/2,(71t-1)/2}
    {L(0, 0), L(5, -1), L(13, 1), L(34, 0)},  // {0,5t-1,13t+1,34t}
    {L(0, 0), L(7, 1), L(28, 1), L(42, 0)},  // {0,7t+1,28t+1,42t}
    {L(0, 0), L(17, 0), L(36, 2), H(95, 3)},  // {0,17t,36t+2,(95t+3)/2}
    {L(0, 0), H(37, -1), H(43, -1), H(89, -1)},  // {0,(37t-1)/2,(43t-1)/2,(89t-1)/2}
    {L(0, 0), L(7, -1), L(18, -1), L(42, -1)},  // {0,7t-1,18t-1,42t-1}
    {L(0, 0), L(4, 0), H(33, 1), L(40, 0)},  // {0,4t,(33t+1)/2,40t}
    {L(0, 0), L(6, -1), L(33, 1), L(45, 1)},  // {0,6t-1,33t+1,45t+1}
    {L(0, 0), L(15, 1), L(31, 2), L(56, 1)},  // {0,15t+1,31t+2,56t+1}
    {L(0, 0), L(7, 0), L(25, 0), L(53, 2)},  // {0,7t,25t,53t+2}
    {L(0, 0), H(15, 1), H(59, 1), H(99, 3)},  // {0,(15t+1)/2,(59t+1)/2,(99t+3)/2}
    {L(0, 0), H(9, -1), H(19, -1), H(109, 3)},  // {0,(9t-1)/2,(19t-1)/2,(109t+3)/2}
    {L(0, 0), L(6, 0), H(31, 1), L(19, 0)},  // {0,6t,(31t+1)/2,19t}
    {L(0, 0), L(5, 1), L(25, 1), L(58, 1)},  // {0,5t+1,25t+1,58t+1}
};

// v = 72t+1, t even (18 blocks)
constexpr SporadicBlock kOneMod72Even[] = {
    {L(0, 0), L(0, 1), L(3, -2), L(11, -2)},  // {0,1,3t-2,11t-2}
    {L(0, 0), L(3, -1), L(15, -2), L(60, 1)},  // {0,3t-1,15t-2,60t+1}
    {L(0, 0), H(3, 4), L(6, 1), L(19, 1)},  // {0,(3t)/2+2,6t+1,19t+1}
    {L(0, 0), L(0, 2), L(35, 0), L(42, 1)},  // {0,2,35t,42t+1}
    {L(0, 0), L(8, 2), L(38, 3), H(99, 4)},  // {0,8t+2,38t+3,(99t)/2+2}
    {L(0, 0), H(19, 4), H(57, 2), H(107, 4)},  // {0,(19t)/2+2,(57t)/2+1,(107t)/2+2}
    {L(0, 0), H(19, 0), H(33, 0), H(95, 4)},  // {0,(19t)/2,(33t)/2,(95t)/2+2}
    {L(0, 0), L(20, 0), L(39, 2), L(46, 0)},  // {0,20t,39t+2,46t}
    {L(0, 0), H(59, 0), L(31, 1), L(45, 0)},  // {0,(59t)/2,31t+1,45t}
    {L(0, 0), H(3, 0), L(25, 0), L(64, 0)},  // {0,(3t)/2,25t,64t}
    {L(0, 0), L(15, 1), L(20, 1), H(55, 2)},  // {0,15t+1,20t+1,(55t)/2+1}
    {L(0, 0), H(7, 0), L(40, 1), L(54, 1)},  // {0,(7t)/2,40t+1,54t+1}
    {L(0, 0), L(4, 0), L(15, 0), L(51, 2)},  // {0,4t,15t,51t+2}
    {L(0, 0), L(5, -1), L(22, -1), L(50, 1)},  // {0,5t-1,22t-1,50t+1}
    {L(0, 0), L(6, 0), L(24, -1), L(51, 1)},  // {0,6t,24t-1,51t+1}
    {L(0, 0), L(3, 0), L(16, 1), L(39, 1)},  // {0,3t,16t+1,39t+1}
    {L(0, 0), L(12, 1), L(16, 0), L(65, 2)},  // {0,12t+1,16t,65t+2}
    {L(0, 0), L(5, 1), L(29, 1), L(40, 0)},  // {0,5t+1,29t+1,40t}
};

// v = 72t+12x+1, x=1, t odd (19 blocks)
constexpr SporadicBlock kCdf1Odd[] = {
    {L(0, 0), L(0, 2), L(35, 5), L(41, 7)},  // {0,2,35t+5,41t+7}
    {L(0, 0), H(3, -3), L(14, 0), L(56, 10)},  // {0,(3t-3)/2,14t,56t+10}
    {L(0, 0), H(3, -1), L(13, 1), L(25, 3)},  // {0,(3t-1)/2,13t+1,25t+3}
    {L(0, 0), H(3, 1), L(5, 1), L(23, 2)},  // {0,(3t+1)/2,5t+1,23t+2}
    {L(0, 0), L(3, -3), L(3, -2), L(35, 4)},  // {0,3t-3,3t-2,35t+4}
    {L(0, 0), L(3, 0), L(27, 4), L(68, 13)},  // {0,3t,27t+4,68t+13}
    {L(0, 0), L(4, 2), L(27, 6), L(68, 12)},  // {0,4t+2,27t+6,68t+12}
    {L(0, 0), L(5, 2), L(20, 2), H(135, 23)},  // {0,5t+2,20t+2,(135t+23)/2}
    {L(0, 0), L(6, 1), L(25, 5), L(52, 10)},  // {0,6t+1,25t+5,52t+10}
    {L(0, 0), H(19, 3), L(26, 5), L(45, 6)},  // {0,(19t+3)/2,26t+5,45t+6}
    {L(0, 0), L(11, 0), L(22, 2), H(129, 23)},  // {0,11t,22t+2,(129t+23)/2}
    {L(0, 0), L(12, 1), L(19, 2), L(27, 3)},  // {0,12t+1,19t+2,27t+3}
    {L(0, 0), L(15, -1), L(23, 3), L(65, 11)},  // {0,15t-1,23t+3,65t+11}
    {L(0, 0), L(15, 1), L(34, 4), L(42, 9)},  // {0,15t+1,34t+4,42t+9}
    {L(0, 0), H(31, 7), L(25, 6), L(59, 11)},  // {0,(31t+7)/2,25t+6,59t+11}
    {L(0, 0), L(18, 2), L(21, 1), L(57, 10)},  // {0,18t+2,21t+1,57t+10}
    {L(0, 0), L(21, 2), L(24, 3), L(57, 9)},  // {0,21t+2,24t+3,57t+9}
    {L(0, 0), H(45, 5), H(61, 9), H(89, 11)},  // {0,(45t+5)/2,(61t+9)/2,(89t+11)/2}
    {L(0, 0), L(25, 4), L(36, 5), L(41, 8)},  // {0,25t+4,36t+5,41t+8}
};

// v = 72t+12x+1, x=1, t even (19 blocks)
constexpr SporadicBlock kCdf1Even[] = {
    {L(0, 0), L(3, -2), L(15, 0), L(40, 6)},  // {0,3t-2,15t,40t+6}
    {L(0, 0), H(3, 4), L(19, 3), L(26, 5)},  // {0,(3t)/2+2,19t+3,26t+5}
    {L(0, 0), L(3, -3), L(40, 7), H(125, 18)},  // {0,3t-3,40t+7,(125t)/2+9}
    {L(0, 0), H(3, 0), L(23, 2), L(64, 8)},  // {0,(3t)/2,23t+2,64t+8}
    {L(0, 0), L(3, 0), L(22, 2), L(60, 12)},  // {0,3t,22t+2,60t+12}
    {L(0, 0), L(3, 1), L(45, 9), L(51, 11)},  // {0,3t+1,45t+9,51t+11}
    {L(0, 0), L(4, 1), L(8, 1), L(58, 13)},  // {0,4t+1,8t+1,58t+13}
    {L(0, 0), H(7, 2), L(5, 2), L(27, 5)},  // {0,(7t)/2+1,5t+2,27t+5}
    {L(0, 0), H(9, 2), H(71, 10), H(87, 16)},  // {0,(9t)/2+1,(71t)/2+5,(87t)/2+8}
    {L(0, 0), L(5, 3), L(25, 5), L(61, 12)},  // {0,5t+3,25t+5,61t+12}
    {L(0, 0), L(8, 2), L(8, 4), L(53, 9)},  // {0,8t+2,8t+4,53t+9}
    {L(0, 0), L(11, 0), H(37, 2), L(34, 4)},  // {0,11t,(37t)/2+1,34t+4}
    {L(0, 0), H(23, 2), H(59, 6), H(89, 12)},  // {0,(23t)/2+1,(59t)/2+3,(89t)/2+6}
    {L(0, 0), L(14, 1), L(21, 1), H(61, 8)},  // {0,14t+1,21t+1,(61t)/2+4}
    {L(0, 0), L(15, -1), L(30, 3), L(41, 5)},  // {0,15t-1,30t+3,41t+5}
    {L(0, 0), L(15, 2), L(20, 3), L(45, 6)},  // {0,15t+2,20t+3,45t+6}
    {L(0, 0), L(19, 1), L(25, 4), L(56, 10)},  // {0,19t+1,25t+4,56t+10}
    {L(0, 0), L(23, 3), L(36, 4), L(36, 5)},  // {0,23t+3,36t+4,36t+5}
    {L(0, 0), L(24, 4), L(27, 3), L(31, 5)},  // {0,24t+4,27t+3,31t+5}
};

// v = 72t+12x+1, x=2, t odd (20 blocks)
constexpr SporadicBlock kCdf2Odd[] = {
    {L(0, 0), H(3, -3), H(43, 11), H(55, 17)},  // {0,(3t-3)/2,(43t+11)/2,(55t+17)/2}
    {L(0, 0), L(3, -3), L(22, 6), L(47, 14)},  // {0,3t-3,22t+6,47t+14}
    {L(0, 0), L(3, 0), L(14, 3), L(30, 9)},  // {0,3t,14t+3,30t+9}
    {L(0, 0), L(15, 2), L(23, 6), L(64, 17)},  // {0,15t+2,23t+6,64t+17}
    {L(0, 0), L(3, 3), L(24, 9), L(57, 22)},  // {0,3t+3,24t+9,57t+22}
    {L(0, 0), L(4, 3), L(19, 7), L(69, 27)},  // {0,4t+3,19t+7,69t+27}
    {L(0, 0), H(15, 5), H(31, 9), L(25, 9)},  // {0,(15t+5)/2,(31t+9)/2,25t+9}
    {L(0, 0), L(8, 3), L(39, 14), L(44, 16)},  // {0,8t+3,39t+14,44t+16}
    {L(0, 0), L(29, 10), L(37, 15), L(37, 17)},  // {0,29t+10,37t+15,37t+17}
    {L(0, 0), H(19, 11), H(47, 19), H(73, 27)},  // {0,(19t+11)/2,(47t+19)/2,(73t+27)/2}
    {L(0, 0), H(19, 13), L(38, 16), H(99, 37)},  // {0,(19t+13)/2,38t+16,(99t+37)/2}
    {L(0, 0), L(12, 2), L(12, 3), L(30, 10)},  // {0,12t+2,12t+3,30t+10}
    {L(0, 0), L(12, 4), L(37, 14), L(43, 16)},  // {0,12t+4,37t+14,43t+16}
    {L(0, 0), L(15, 5), H(33, 11), H(137, 45)},  // {0,15t+5,(33t+11)/2,(137t+45)/2}
    {L(0, 0), L(3, 2), L(36, 11), L(67, 21)},  // {0,3t+2,36t+11,67t+21}
    {L(0, 0), L(17, 5), H(59, 19), L(34, 12)},  // {0,17t+5,(59t+19)/2,34t+12}
    {L(0, 0), L(17, 6), L(40, 15), H(83, 29)},  // {0,17t+6,40t+15,(83t+29)/2}
    {L(0, 0), L(19, 8), L(22, 7), L(35, 12)},  // {0,19t+8,22t+7,35t+12}
    {L(0, 0), L(23, 8), L(26, 9), L(30, 11)},  // {0,23t+8,26t+9,30t+11}
    {L(0, 0), L(7, 2), L(12, 5), L(56, 20)},  // {0,7t+2,12t+5,56t+20}
};

// v = 72t+12x+1, x=2, t even (20 blocks)
constexpr SporadicBlock kCdf2Even[] = {
    {L(0, 0), L(0, 1), L(15, 4), L(64, 19)},  // {0,1,15t+4,64t+19}
    {L(0, 0), L(0, 2), L(12, 4), L(28, 10)},  // {0,2,12t+4,28t+10}
    {L(0, 0), H(3, 0), L(30, 9), L(64, 17)},  // {0,(3t)/2,30t+9,64t+17}
    {L(0, 0), H(3, 2), L(17, 5), H(37, 14)},  // {0,(3t)/2+1,17t+5,(37t)/2+7}
    {L(0, 0), L(3, -1), L(32, 9), L(68, 23)},  // {0,3t-1,32t+9,68t+23}
    {L(0, 0), L(4, 3), L(7, 3), L(25, 9)},  // {0,4t+3,7t+3,25t+9}
    {L(0, 0), H(9, 4), L(27, 8), L(64, 23)},  // {0,(9t)/2+2,27t+8,64t+23}
    {L(0, 0), L(5, 2), L(24, 9), L(36, 12)},  // {0,5t+2,24t+9,36t+12}
    {L(0, 0), L(5, 3), L(18, 8), L(37, 17)},  // {0,5t+3,18t+8,37t+17}
    {L(0, 0), L(5, 4), L(33, 13), L(50, 20)},  // {0,5t+4,33t+13,50t+20}
    {L(0, 0), L(6, 3), H(71, 24), L(47, 14)},  // {0,6t+3,(71t)/2+12,47t+14}
    {L(0, 0), L(7, 2), L(23, 7), L(26, 10)},  // {0,7t+2,23t+7,26t+10}
    {L(0, 0), H(33, 10), L(26, 11), H(95, 34)},  // {0,(33t)/2+5,26t+11,(95t)/2+17}
    {L(0, 0), L(8, 3), L(30, 10), L(33, 11)},  // {0,8t+3,30t+10,33t+11}
    {L(0, 0), L(8, 4), L(23, 9), L(37, 13)},  // {0,8t+4,23t+9,37t+13}
    {L(0, 0), L(12, 5), L(15, 2), L(35, 11)},  // {0,12t+5,15t+2,35t+11}
    {L(0, 0), L(14, 3), H(35, 12), H(47, 20)},  // {0,14t+3,(35t)/2+6,(47t)/2+10}
    {L(0, 0), H(15, 4), H(55, 16), H(61, 20)},  // {0,(15t)/2+2,(55t)/2+8,(61t)/2+10}
    {L(0, 0), L(18, 7), L(31, 11), L(56, 21)},  // {0,18t+7,31t+11,56t+21}
    {L(0, 0), L(22, 6), L(30, 11), L(33, 9)},  // {0,22t+6,30t+11,33t+9}
};

// v = 72t+12x+1, x=3, t odd (21 blocks)
constexpr SporadicBlock kCdf3Odd[] = {
    {L(0, 0), L(0, 1), L(8, 9), L(55, 28)},  // {0,1,8t+9,55t+28}
    {L(0, 0), H(3, -3), L(23, 10), L(64, 27)},  // {0,(3t-3)/2,23t+10,64t+27}
    {L(0, 0), L(14, 7), L(35, 16), L(47, 24)},  // {0,14t+7,35t+16,47t+24}
    {L(0, 0), L(3, 3), L(8, 7), L(57, 30)},  // {0,3t+3,8t+7,57t+30}
    {L(0, 0), L(4, 2), L(41, 22), L(60, 32)},  // {0,4t+2,41t+22,60t+32}
    {L(0, 0), L(25, 16), L(32, 19), L(43, 25)},  // {0,25t+16,32t+19,43t+25}
    {L(0, 0), L(6, 4), H(35, 19), H(137, 69)},  // {0,6t+4,(35t+19)/2,(137t+69)/2}
    {L(0, 0), L(7, 4), L(36, 17), L(43, 23)},  // {0,7t+4,36t+17,43t+23}
    {L(0, 0), L(20, 10), L(24, 14), L(57, 32)},  // {0,20t+10,24t+14,57t+32}
    {L(0, 0), L(12, 6), L(15, 6), L(23, 11)},  // {0,12t+6,15t+6,23t+11}
    {L(0, 0), L(13, 8), L(16, 6), L(41, 21)},  // {0,13t+8,16t+6,41t+21}
    {L(0, 0), L(12, 7), L(16, 10), L(65, 35)},  // {0,12t+7,16t+10,65t+35}
    {L(0, 0), H(3, 1), H(49, 27), H(87, 49)},  // {0,(3t+1)/2,(49t+27)/2,(87t+49)/2}
    {L(0, 0), H(33, 19), L(26, 17), H(113, 61)},  // {0,(33t+19)/2,26t+17,(113t+61)/2}
    {L(0, 0), L(19, 12), L(19, 14), L(22, 11)},  // {0,19t+12,19t+14,22t+11}
    {L(0, 0), H(45, 21), H(55, 27), H(107, 55)},  // {0,(45t+21)/2,(55t+27)/2,(107t+55)/2}
    {L(0, 0), H(15, 11), L(20, 13), L(56, 29)},  // {0,(15t+11)/2,20t+13,56t+29}
    {L(0, 0), L(24, 13), L(31, 18), L(45, 24)},  // {0,24t+13,31t+18,45t+24}
    {L(0, 0), H(59, 27), L(31, 13), H(71, 33)},  // {0,(59t+27)/2,31t+13,(71t+33)/2}
    {L(0, 0), L(5, 5), L(8, 6), L(38, 20)},  // {0,5t+5,8t+6,38t+20}
    {L(0, 0), L(25, 14), L(38, 21), L(41, 23)},  // {0,25t+14,38t+21,41t+23}
};

// v = 72t+12x+1, x=3, t even (21 blocks)
constexpr SporadicBlock kCdf3Even[] = {
    {L(0, 0), L(0, 2), L(8, 10), L(37, 22)},  // {0,2,8t+10,37t+22}
    {L(0, 0), H(3, 4), H(19, 16), H(101, 50)},  // {0,(3t)/2+2,(19t)/2+8,(101t)/2+25}
    {L(0, 0), L(25, 15), L(25, 16), L(28, 13)},  // {0,25t+15,25t+16,28t+13}
    {L(0, 0), H(33, 18), L(26, 18), H(113, 62)},  // {0,(33t)/2+9,26t+18,(113t)/2+31}
    {L(0, 0), H(7, 6), H(37, 18), H(89, 48)},  // {0,(7t)/2+3,(37t)/2+9,(89t)/2+24}
    {L(0, 0), H(47, 28), L(41, 23), H(85, 48)},  // {0,(47t)/2+14,41t+23,(85t)/2+24}
    {L(0, 0), L(20, 11), L(24, 14), L(27, 13)},  // {0,20t+11,24t+14,27t+13}
    {L(0, 0), L(11, 5), L(17, 9), L(64, 28)},  // {0,11t+5,17t+9,64t+28}
    {L(0, 0), H(23, 10), L(40, 17), H(99, 54)},  // {0,(23t)/2+5,40t+17,(99t)/2+27}
    {L(0, 0), L(25, 14), L(36, 20), L(41, 24)},  // {0,25t+14,36t+20,41t+24}
    {L(0, 0), L(13, 8), L(16, 9), L(49, 24)},  // {0,13t+8,16t+9,49t+24}
    {L(0, 0), L(16, 6), L(29, 13), L(36, 18)},  // {0,16t+6,29t+13,36t+18}
    {L(0, 0), L(16, 7), L(30, 13), L(35, 16)},  // {0,16t+7,30t+13,35t+16}
    {L(0, 0), L(7, 4), L(14, 7), L(19, 12)},  // {0,7t+4,14t+7,19t+12}
    {L(0, 0), L(17, 10), L(21, 12), L(51, 26)},  // {0,17t+10,21t+12,51t+26}
    {L(0, 0), L(18, 10), L(33, 17), L(49, 25)},  // {0,18t+10,33t+17,49t+25}
    {L(0, 0), L(8, 5), L(29, 14), L(33, 18)},  // {0,8t+5,29t+14,33t+18}
    {L(0, 0), L(23, 10), L(31, 17), L(54, 28)},  // {0,23t+10,31t+17,54t+28}
    {L(0, 0), L(3, 3), L(6, 5), H(141, 74)},  // {0,3t+3,6t+5,(141t)/2+37}
    {L(0, 0), L(7, 6), L(19, 11), L(22, 11)},  // {0,7t+6,19t+11,22t+11}
    {L(0, 0), L(12, 6), H(49, 26), L(60, 30)},  // {0,12t+6,(49t)/2+13,60t+30}
};

// v = 72t+12x+1, x=4, t odd (22 blocks)
constexpr SporadicBlock kCdf4Odd[] = {
    {L(0, 0), L(0, 1), L(3, -2), L(11, 8)},  // {0,1,3t-2,11t+8}
    {L(0, 0), L(0, 2), L(4, 2), L(53, 33)},  // {0,2,4t+2,53t+33}
    {L(0, 0), H(3, -3), L(23, 14), L(64, 40)},  // {0,(3t-3)/2,23t+14,64t+40}
    {L(0, 0), L(3, -1), L(15, 9), L(39, 26)},  // {0,3t-1,15t+9,39t+26}
    {L(0, 0), L(3, 1), L(15, 10), L(31, 20)},  // {0,3t+1,15t+10,31t+20}
    {L(0, 0), L(4, 3), L(23, 15), L(40, 27)},  // {0,4t+3,23t+15,40t+27}
    {L(0, 0), L(4, 4), L(39, 25), L(51, 33)},  // {0,4t+4,39t+25,51t+33}
    {L(0, 0), L(4, 5), L(20, 17), L(42, 32)},  // {0,4t+5,20t+17,42t+32}
    {L(0, 0), L(27, 19), H(61, 39), L(46, 30)},  // {0,27t+19,(61t+39)/2,46t+30}
    {L(0, 0), L(5, 7), L(12, 11), L(69, 49)},  // {0,5t+7,12t+11,69t+49}
    {L(0, 0), L(7, 5), L(36, 23), L(41, 28)},  // {0,7t+5,36t+23,41t+28}
    {L(0, 0), L(14, 10), L(37, 26), L(41, 27)},  // {0,14t+10,37t+26,41t+27}
    {L(0, 0), H(15, 11), H(57, 37), H(121, 83)},  // {0,(15t+11)/2,(57t+37)/2,(121t+83)/2}
    {L(0, 0), L(8, 5), L(13, 11), L(60, 42)},  // {0,8t+5,13t+11,60t+42}
    {L(0, 0), L(14, 11), L(35, 22), L(39, 28)},  // {0,14t+11,35t+22,39t+28}
    {L(0, 0), L(8, 8), L(39, 27), L(55, 38)},  // {0,8t+8,39t+27,55t+38}
    {L(0, 0), H(19, 17), H(55, 39), L(45, 31)},  // {0,(19t+17)/2,(55t+39)/2,45t+31}
    {L(0, 0), L(11, 5), L(30, 19), L(60, 37)},  // {0,11t+5,30t+19,60t+37}
    {L(0, 0), L(11, 6), H(59, 35), H(119, 75)},  // {0,11t+6,(59t+35)/2,(119t+75)/2}
    {L(0, 0), H(9, 11), L(6, 5), L(27, 20)},  // {0,(9t+11)/2,6t+5,27t+20}
    {L(0, 0), L(8, 6), H(19, 13), H(111, 75)},  // {0,8t+6,(19t+13)/2,(111t+75)/2}
    {L(0, 0), L(7, 6), L(13, 12), L(31, 24)},  // {0,7t+6,13t+12,31t+24}
};

// v = 72t+12x+1, x=4, t even (22 blocks)
constexpr SporadicBlock kCdf4Even[] = {
    {L(0, 0), L(0, 1), H(19, 18), L(39, 26)},  // {0,1,(19t)/2+9,39t+26}
    {L(0, 0), H(3, 2), H(19, 20), H(87, 62)},  // {0,(3t)/2+1,(19t)/2+10,(87t)/2+31}
    {L(0, 0), H(33, 22), H(83, 60), H(89, 60)},  // {0,(33t)/2+11,(83t)/2+30,(89t)/2+30}
    {L(0, 0), L(3, -2), L(30, 17), L(35, 22)},  // {0,3t-2,30t+17,35t+22}
    {L(0, 0), L(3, 1), L(8, 8), L(26, 19)},  // {0,3t+1,8t+8,26t+19}
    {L(0, 0), H(7, 2), H(31, 20), L(51, 33)},  // {0,(7t)/2+1,(31t)/2+10,51t+33}
    {L(0, 0), L(4, 1), L(16, 11), L(64, 43)},  // {0,4t+1,16t+11,64t+43}
    {L(0, 0), L(4, 4), L(27, 20), L(41, 30)},  // {0,4t+4,27t+20,41t+30}
    {L(0, 0), L(11, 8), L(27, 18), L(46, 29)},  // {0,11t+8,27t+18,46t+29}
    {L(0, 0), L(6, 6), L(23, 17), L(53, 35)},  // {0,6t+6,23t+17,53t+35}
    {L(0, 0), L(7, 4), L(11, 7), H(121, 84)},  // {0,7t+4,11t+7,(121t)/2+42}
    {L(0, 0), L(7, 5), L(34, 22), L(67, 43)},  // {0,7t+5,34t+22,67t+43}
    {L(0, 0), L(7, 6), L(11, 6), L(24, 18)},  // {0,7t+6,11t+6,24t+18}
    {L(0, 0), H(15, 10), L(20, 16), H(43, 32)},  // {0,(15t)/2+5,20t+16,(43t)/2+16}
    {L(0, 0), L(8, 5), L(41, 27), L(49, 34)},  // {0,8t+5,41t+27,49t+34}
    {L(0, 0), L(11, 5), L(15, 10), L(36, 23)},  // {0,11t+5,15t+10,36t+23}
    {L(0, 0), H(9, 10), L(6, 7), H(47, 36)},  // {0,(9t)/2+5,6t+7,(47t)/2+18}
    {L(0, 0), L(12, 8), L(41, 26), L(54, 37)},  // {0,12t+8,41t+26,54t+37}
    {L(0, 0), L(15, 9), L(36, 24), L(56, 37)},  // {0,15t+9,36t+24,56t+37}
    {L(0, 0), L(3, -3), L(3, -1), L(22, 15)},  // {0,3t-3,3t-1,22t+15}
    {L(0, 0), L(19, 12), L(23, 14), L(31, 24)},  // {0,19t+12,23t+14,31t+24}
    {L(0, 0), L(21, 11), L(25, 17), L(57, 38)},  // {0,21t+11,25t+17,57t+38}
};

// v = 72t+12x+1, x=5, t odd (23 blocks)
constexpr SporadicBlock kCdf5Odd[] = {
    {L(0, 0), L(0, 1), L(3, -2), L(60, 48)},  // {0,1,3t-2,60t+48}
    {L(0, 0), H(3, -1), H(19, 17), H(111, 93)},  // {0,(3t-1)/2,(19t+17)/2,(111t+93)/2}
    {L(0, 0), L(25, 21), L(36, 28), L(41, 36)},  // {0,25t+21,36t+28,41t+36}
    {L(0, 0), L(3, 1), L(15, 12), L(39, 33)},  // {0,3t+1,15t+12,39t+33}
    {L(0, 0), H(7, 1), L(8, 7), L(11, 6)},  // {0,(7t+1)/2,8t+7,11t+6}
    {L(0, 0), L(16, 13), L(33, 27), L(40, 33)},  // {0,16t+13,33t+27,40t+33}
    {L(0, 0), L(4, 1), L(12, 12), L(47, 39)},  // {0,4t+1,12t+12,47t+39}
    {L(0, 0), L(4, 2), L(35, 28), L(54, 46)},  // {0,4t+2,35t+28,54t+46}
    {L(0, 0), L(4, 5), L(8, 8), L(72, 59)},  // {0,4t+5,8t+8,72t+59}
    {L(0, 0), L(4, 6), L(31, 28), L(53, 46)},  // {0,4t+6,31t+28,53t+46}
    {L(0, 0), L(5, 6), L(35, 29), L(53, 45)},  // {0,5t+6,35t+29,53t+45}
    {L(0, 0), L(6, 6), L(31, 30), H(85, 77)},  // {0,6t+6,31t+30,(85t+77)/2}
    {L(0, 0), L(6, 7), H(47, 41), L(51, 44)},  // {0,6t+7,(47t+41)/2,51t+44}
    {L(0, 0), L(8, 5), L(21, 18), L(41, 34)},  // {0,8t+5,21t+18,41t+34}
    {L(0, 0), L(8, 6), L(30, 25), L(44, 37)},  // {0,8t+6,30t+25,44t+37}
    {L(0, 0), H(19, 15), L(11, 8), L(57, 47)},  // {0,(19t+15)/2,11t+8,57t+47}
    {L(0, 0), H(19, 19), L(32, 29), L(51, 46)},  // {0,(19t+19)/2,32t+29,51t+46}
    {L(0, 0), L(12, 9), L(25, 23), L(56, 47)},  // {0,12t+9,25t+23,56t+47}
    {L(0, 0), L(15, 13), L(27, 23), L(60, 53)},  // {0,15t+13,27t+23,60t+53}
    {L(0, 0), L(4, 0), L(18, 13), L(23, 20)},  // {0,4t,18t+13,23t+20}
    {L(0, 0), L(20, 19), H(43, 35), L(50, 41)},  // {0,20t+19,(43t+35)/2,50t+41}
    {L(0, 0), L(23, 19), L(30, 24), L(34, 28)},  // {0,23t+19,30t+24,34t+28}
    {L(0, 0), L(3, 0), H(31, 27), L(34, 29)},  // {0,3t,(31t+27)/2,34t+29}
};

// v = 72t+12x+1, x=5, t even (23 blocks)
constexpr SporadicBlock kCdf5Even[] = {
    {L(0, 0), L(0, 1), H(19, 20), L(39, 32)},  // {0,1,(19t)/2+10,39t+32}
    {L(0, 0), H(3, 2), L(24, 20), L(64, 51)},  // {0,(3t)/2+1,24t+20,64t+51}
    {L(0, 0), L(19, 20), L(22, 20), L(37, 34)},  // {0,19t+20,22t+20,37t+34}
    {L(0, 0), H(7, 2), H(31, 26), H(55, 46)},  // {0,(7t)/2+1,(31t)/2+13,(55t)/2+23}
    {L(0, 0), L(4, 4), L(15, 11), L(52, 44)},  // {0,4t+4,15t+11,52t+44}
    {L(0, 0), L(13, 14), L(17, 14), L(44, 38)},  // {0,13t+14,17t+14,44t+38}
    {L(0, 0), L(27, 23), L(30, 22), L(35, 29)},  // {0,27t+23,30t+22,35t+29}
    {L(0, 0), L(5, 6), L(23, 19), L(51, 43)},  // {0,5t+6,23t+19,51t+43}
    {L(0, 0), L(6, 7), L(33, 28), L(65, 55)},  // {0,6t+7,33t+28,65t+55}
    {L(0, 0), H(35, 26), L(19, 15), H(135, 110)},  // {0,(35t)/2+13,19t+15,(135t)/2+55}
    {L(0, 0), L(11, 8), H(71, 58), L(47, 37)},  // {0,11t+8,(71t)/2+29,47t+37}
    {L(0, 0), L(12, 9), H(61, 48), H(111, 94)},  // {0,12t+9,(61t)/2+24,(111t)/2+47}
    {L(0, 0), L(12, 14), L(16, 15), L(42, 38)},  // {0,12t+14,16t+15,42t+38}
    {L(0, 0), L(4, 5), L(8, 11), L(68, 59)},  // {0,4t+5,8t+11,68t+59}
    {L(0, 0), L(15, 12), L(23, 20), L(56, 47)},  // {0,15t+12,23t+20,56t+47}
    {L(0, 0), L(16, 13), L(30, 25), L(41, 34)},  // {0,16t+13,30t+25,41t+34}
    {L(0, 0), H(15, 10), L(20, 18), H(43, 36)},  // {0,(15t)/2+5,20t+18,(43t)/2+18}
    {L(0, 0), L(18, 15), L(22, 18), L(41, 36)},  // {0,18t+15,22t+18,41t+36}
    {L(0, 0), L(19, 16), L(38, 33), L(50, 44)},  // {0,19t+16,38t+33,50t+44}
    {L(0, 0), L(3, 1), L(8, 9), L(11, 6)},  // {0,3t+1,8t+9,11t+6}
    {L(0, 0), L(21, 15), L(21, 17), L(57, 48)},  // {0,21t+15,21t+17,57t+48}
    {L(0, 0), L(25, 22), L(31, 30), L(43, 38)},  // {0,25t+22,31t+30,43t+38}
    {L(0, 0), L(4, 7), L(31, 29), L(69, 63)},  // {0,4t+7,31t+29,69t+63}
};

// v = 72t+12x+4, x=0, t odd (18 blocks)
constexpr SporadicBlock kQuotient0Odd[] = {
    {L(0, 0), L(0, 1), L(36, 1), L(67, 4)},  // {0,1,36t+1,67t+4}
    {L(0, 0), L(0, 2), L(15, 0), L(45, 4)},  // {0,2,15t,45t+4}
    {L(0, 0), H(3, -3), L(14, -1), H(83, 1)},  // {0,(3t-3)/2,14t-1,(83t+1)/2}
    {L(0, 0), H(3, -1), L(11, -2), H(95, 5)},  // {0,(3t-1)/2,11t-2,(95t+5)/2}
    {L(0, 0), H(3, 1), L(13, 1), L(20, 1)},  // {0,(3t+1)/2,13t+1,20t+1}
    {L(0, 0), L(3, -3), L(16, 0), L(19, 0)},  // {0,3t-3,16t,19t}
    {L(0, 0), L(3, -2), L(35, -1), L(42, 1)},  // {0,3t-2,35t-1,42t+1}
    {L(0, 0), L(3, -1), L(42, 3), L(53, 3)},  // {0,3t-1,42t+3,53t+3}
    {L(0, 0), L(6, -1), H(31, -1), L(65, 3)},  // {0,6t-1,(31t-1)/2,65t+3}
    {L(0, 0), L(7, -2), L(21, 0), L(44, 2)},  // {0,7t-2,21t,44t+2}
    {L(0, 0), L(7, -1), L(11, -1), L(34, 0)},  // {0,7t-1,11t-1,34t}
    {L(0, 0), H(15, 3), L(25, 3), H(137, 9)},  // {0,(15t+3)/2,25t+3,(137t+9)/2}
    {L(0, 0), H(19, -1), H(43, 1), H(111, 3)},  // {0,(19t-1)/2,(43t+1)/2,(111t+3)/2}
    {L(0, 0), L(12, 0), L(16, -1), L(64, 2)},  // {0,12t,16t-1,64t+2}
    {L(0, 0), L(16, 1), L(22, 1), L(64, 3)},  // {0,16t+1,22t+1,64t+3}
    {L(0, 0), L(16, 2), L(21, 1), L(49, 4)},  // {0,16t+2,21t+1,49t+4}
    {L(0, 0), L(19, 3), L(30, 0), L(55, 2)},  // {0,19t+3,30t,55t+2}
    {L(0, 0), L(25, 1), H(59, 1), L(53, 2)},  // {0,25t+1,(59t+1)/2,53t+2}
};

// v = 72t+12x+4, x=0, t even (18 blocks)
constexpr SporadicBlock kQuotient0Even[] = {
    {L(0, 0), L(0, 1), L(36, 5), L(47, 2)},  // {0,1,36t+5,47t+2}
    {L(0, 0), H(3, 2), L(30, 3), L(64, 3)},  // {0,(3t)/2+1,30t+3,64t+3}
    {L(0, 0), L(3, -3), L(3, -1), H(9, -2)},  // {0,3t-3,3t-1,(9t)/2-1}
    {L(0, 0), L(3, -2), L(40, 2), L(56, 2)},  // {0,3t-2,40t+2,56t+2}
    {L(0, 0), H(7, 0), H(19, 0), L(22, 0)},  // {0,(7t)/2,(19t)/2,22t}
    {L(0, 0), L(4, -1), L(23, 0), L(61, 5)},  // {0,4t-1,23t,61t+5}
    {L(0, 0), L(5, -1), L(33, 1), L(50, 3)},  // {0,5t-1,33t+1,50t+3}
    {L(0, 0), L(5, 0), L(32, 1), L(65, 3)},  // {0,5t,32t+1,65t+3}
    {L(0, 0), L(5, 1), L(21, 0), L(47, 3)},  // {0,5t+1,21t,47t+3}
    {L(0, 0), L(6, 1), L(13, 3), L(65, 5)},  // {0,6t+1,13t+3,65t+5}
    {L(0, 0), L(7, -2), L(11, -2), L(35, -1)},  // {0,7t-2,11t-2,35t-1}
    {L(0, 0), L(7, 0), H(47, 4), H(99, 8)},  // {0,7t,(47t)/2+2,(99t)/2+4}
    {L(0, 0), H(15, 2), H(61, 6), L(58, 4)},  // {0,(15t)/2+1,(61t)/2+3,58t+4}
    {L(0, 0), L(8, 2), L(31, 3), L(61, 4)},  // {0,8t+2,31t+3,61t+4}
    {L(0, 0), H(19, 2), L(21, 1), L(57, 4)},  // {0,(19t)/2+1,21t+1,57t+4}
    {L(0, 0), L(11, 1), L(24, 2), L(27, 2)},  // {0,11t+1,24t+2,27t+2}
    {L(0, 0), L(14, 1), L(30, 4), L(42, 4)},  // {0,14t+1,30t+4,42t+4}
    {L(0, 0), H(31, -2), L(33, 0), L(52, 3)},  // {0,(31t)/2-1,33t,52t+3}
};

// v = 72t+12x+4, x=1, t odd (19 blocks)
constexpr SporadicBlock kQuotient1Odd[] = {
    {L(0, 0), L(0, 1), L(8, 4), L(23, 3)},  // {0,1,8t+4,23t+3}
    {L(0, 0), H(3, -1), L(25, 5), L(30, 6)},  // {0,(3t-1)/2,25t+5,30t+6}
    {L(0, 0), H(3, 1), L(20, 4), L(57, 13)},  // {0,(3t+1)/2,20t+4,57t+13}
    {L(0, 0), L(3, -3), L(3, -1), L(64, 11)},  // {0,3t-3,3t-1,64t+11}
    {L(0, 0), H(7, 1), L(21, 4), H(125, 25)},  // {0,(7t+1)/2,21t+4,(125t+25)/2}
    {L(0, 0), L(4, 0), L(29, 6), L(65, 16)},  // {0,4t,29t+6,65t+16}
    {L(0, 0), L(4, 1), L(7, 1), L(23, 5)},  // {0,4t+1,7t+1,23t+5}
    {L(0, 0), L(4, 2), L(31, 7), L(57, 12)},  // {0,4t+2,31t+7,57t+12}
    {L(0, 0), H(9, 3), L(14, 3), L(27, 4)},  // {0,(9t+3)/2,14t+3,27t+4}
    {L(0, 0), L(5, 3), L(23, 6), L(49, 12)},  // {0,5t+3,23t+6,49t+12}
    {L(0, 0), L(6, 2), L(30, 8), L(45, 10)},  // {0,6t+2,30t+8,45t+10}
    {L(0, 0), L(7, 3), L(40, 10), L(51, 13)},  // {0,7t+3,40t+10,51t+13}
    {L(0, 0), L(7, 4), L(39, 11), L(42, 9)},  // {0,7t+4,39t+11,42t+9}
    {L(0, 0), H(15, 7), L(20, 5), H(43, 7)},  // {0,(15t+7)/2,20t+5,(43t+7)/2}
    {L(0, 0), L(11, 1), L(16, 3), L(35, 6)},  // {0,11t+1,16t+3,35t+6}
    {L(0, 0), H(23, 7), H(89, 19), H(95, 21)},  // {0,(23t+7)/2,(89t+19)/2,(95t+21)/2}
    {L(0, 0), L(13, 2), L(30, 5), L(47, 9)},  // {0,13t+2,30t+5,47t+9}
    {L(0, 0), L(19, 5), L(34, 6), L(41, 8)},  // {0,19t+5,34t+6,41t+8}
    {L(0, 0), L(27, 7), H(73, 19), H(85, 21)},  // {0,27t+7,(73t+19)/2,(85t+21)/2}
};

// v = 72t+12x+4, x=1, t even (19 blocks)
constexpr SporadicBlock kQuotient1Even[] = {
    {L(0, 0), L(0, 2), L(49, 13), L(57, 17)},  // {0,2,49t+13,57t+17}
    {L(0, 0), H(3, 4), L(19, 5), H(135, 30)},  // {0,(3t)/2+2,19t+5,(135t)/2+15}
    {L(0, 0), L(3, -3), L(11, 0), H(25, 2)},  // {0,3t-3,11t,(25t)/2+1}
    {L(0, 0), L(3, -1), L(14, 1), L(59, 12)},  // {0,3t-1,14t+1,59t+12}
    {L(0, 0), L(3, 0), L(48, 10), L(55, 12)},  // {0,3t,48t+10,55t+12}
    {L(0, 0), H(7, 2), L(5, 1), L(47, 11)},  // {0,(7t)/2+1,5t+1,47t+11}
    {L(0, 0), L(4, 0), H(23, 6), L(34, 5)},  // {0,4t,(23t)/2+3,34t+5}
    {L(0, 0), L(5, 2), L(36, 10), L(57, 13)},  // {0,5t+2,36t+10,57t+13}
    {L(0, 0), L(5, 3), L(16, 4), L(49, 12)},  // {0,5t+3,16t+4,49t+12}
    {L(0, 0), L(6, 2), L(33, 6), H(85, 22)},  // {0,6t+2,33t+6,(85t)/2+11}
    {L(0, 0), L(7, 4), L(39, 11), L(42, 9)},  // {0,7t+4,39t+11,42t+9}
    {L(0, 0), L(8, 5), L(30, 8), L(49, 14)},  // {0,8t+5,30t+8,49t+14}
    {L(0, 0), L(11, 3), L(24, 5), L(45, 9)},  // {0,11t+3,24t+5,45t+9}
    {L(0, 0), L(13, 1), L(17, 3), L(36, 7)},  // {0,13t+1,17t+3,36t+7}
    {L(0, 0), L(14, 2), L(29, 6), L(47, 9)},  // {0,14t+2,29t+6,47t+9}
    {L(0, 0), L(15, 2), L(19, 3), L(26, 6)},  // {0,15t+2,19t+3,26t+6}
    {L(0, 0), H(31, 6), L(25, 6), H(111, 26)},  // {0,(31t)/2+3,25t+6,(111t)/2+13}
    {L(0, 0), H(49, 10), H(55, 12), L(46, 9)},  // {0,(49t)/2+5,(55t)/2+6,46t+9}
    {L(0, 0), L(28, 6), L(35, 6), L(35, 7)},  // {0,28t+6,35t+6,35t+7}
};

// v = 72t+12x+4, x=2, t odd (20 blocks)
constexpr SporadicBlock kQuotient2Odd[] = {
    {L(0, 0), L(0, 1), H(3, -1), L(64, 21)},  // {0,1,(3t-1)/2,64t+21}
    {L(0, 0), L(0, 2), L(3, 3), L(15, 7)},  // {0,2,3t+3,15t+7}
    {L(0, 0), L(3, -1), L(35, 11), L(54, 20)},  // {0,3t-1,35t+11,54t+20}
    {L(0, 0), L(3, 2), L(31, 11), L(55, 21)},  // {0,3t+2,31t+11,55t+21}
    {L(0, 0), H(7, 5), H(19, 11), H(85, 37)},  // {0,(7t+5)/2,(19t+11)/2,(85t+37)/2}
    {L(0, 0), H(9, 5), H(15, 5), H(99, 43)},  // {0,(9t+5)/2,(15t+5)/2,(99t+43)/2}
    {L(0, 0), L(5, 2), L(23, 8), L(42, 18)},  // {0,5t+2,23t+8,42t+18}
    {L(0, 0), L(5, 4), L(49, 22), L(52, 20)},  // {0,5t+4,49t+22,52t+20}
    {L(0, 0), L(6, 2), L(14, 4), H(101, 41)},  // {0,6t+2,14t+4,(101t+41)/2}
    {L(0, 0), L(7, 3), L(14, 5), L(50, 21)},  // {0,7t+3,14t+5,50t+21}
    {L(0, 0), L(8, 4), H(19, 9), L(57, 22)},  // {0,8t+4,(19t+9)/2,57t+22}
    {L(0, 0), L(8, 5), L(25, 10), L(41, 16)},  // {0,8t+5,25t+10,41t+16}
    {L(0, 0), L(8, 6), L(23, 9), L(44, 17)},  // {0,8t+6,23t+9,44t+17}
    {L(0, 0), L(11, 5), L(19, 8), L(24, 11)},  // {0,11t+5,19t+8,24t+11}
    {L(0, 0), H(23, 9), H(31, 13), H(83, 33)},  // {0,(23t+9)/2,(31t+13)/2,(83t+33)/2}
    {L(0, 0), L(12, 5), L(38, 16), H(111, 45)},  // {0,12t+5,38t+16,(111t+45)/2}
    {L(0, 0), L(12, 7), L(15, 4), L(47, 17)},  // {0,12t+7,15t+4,47t+17}
    {L(0, 0), H(25, 13), H(47, 19), H(107, 41)},  // {0,(25t+13)/2,(47t+19)/2,(107t+41)/2}
    {L(0, 0), L(17, 6), L(36, 13), L(48, 19)},  // {0,17t+6,36t+13,48t+19}
    {L(0, 0), L(23, 7), L(27, 10), L(34, 11)},  // {0,23t+7,27t+10,34t+11}
};

// v = 72t+12x+4, x=2, t even (20 blocks)
constexpr SporadicBlock kQuotient2Even[] = {
    {L(0, 0), L(0, 1), H(3, 2), L(64, 21)},  // {0,1,(3t)/2+1,64t+21}
    {L(0, 0), L(0, 2), L(3, -1), L(15, 6)},  // {0,2,3t-1,15t+6}
    {L(0, 0), H(3, 4), L(31, 11), L(64, 23)},  // {0,(3t)/2+2,31t+11,64t+23}
    {L(0, 0), L(3, -2), L(41, 16), L(64, 22)},  // {0,3t-2,41t+16,64t+22}
    {L(0, 0), L(3, 0), L(36, 11), L(67, 25)},  // {0,3t,36t+11,67t+25}
    {L(0, 0), L(3, 1), H(43, 16), L(45, 18)},  // {0,3t+1,(43t)/2+8,45t+18}
    {L(0, 0), L(3, 2), L(17, 5), L(54, 22)},  // {0,3t+2,17t+5,54t+22}
    {L(0, 0), L(3, 3), L(26, 12), L(42, 18)},  // {0,3t+3,26t+12,42t+18}
    {L(0, 0), H(9, 4), H(19, 12), H(113, 44)},  // {0,(9t)/2+2,(19t)/2+6,(113t)/2+22}
    {L(0, 0), L(6, 4), H(57, 20), L(65, 26)},  // {0,6t+4,(57t)/2+10,65t+26}
    {L(0, 0), L(7, 1), L(35, 10), L(53, 18)},  // {0,7t+1,35t+10,53t+18}
    {L(0, 0), H(15, 4), L(11, 5), L(68, 26)},  // {0,(15t)/2+2,11t+5,68t+26}
    {L(0, 0), L(8, 2), L(44, 18), L(50, 21)},  // {0,8t+2,44t+18,50t+21}
    {L(0, 0), L(8, 4), L(25, 11), L(48, 18)},  // {0,8t+4,25t+11,48t+18}
    {L(0, 0), L(12, 4), L(27, 9), L(67, 26)},  // {0,12t+4,27t+9,67t+26}
    {L(0, 0), L(12, 5), L(31, 13), L(61, 25)},  // {0,12t+5,31t+13,61t+25}
    {L(0, 0), L(12, 6), L(19, 9), L(48, 19)},  // {0,12t+6,19t+9,48t+19}
    {L(0, 0), H(25, 12), L(37, 16), L(57, 25)},  // {0,(25t)/2+6,37t+16,57t+25}
    {L(0, 0), L(14, 6), H(61, 22), L(48, 17)},  // {0,14t+6,(61t)/2+11,48t+17}
    {L(0, 0), L(21, 7), L(25, 10), L(44, 17)},  // {0,21t+7,25t+10,44t+17}
};

// v = 72t+12x+4, x=3, t odd (21 blocks)
constexpr SporadicBlock kQuotient3Odd[] = {
    {L(0, 0), L(0, 1), L(25, 18), L(69, 43)},  // {0,1,25t+18,69t+43}
    {L(0, 0), H(3, -3), H(19, 13), H(19, 17)},  // {0,(3t-3)/2,(19t+13)/2,(19t+17)/2}
    {L(0, 0), H(3, -1), L(31, 14), H(71, 35)},  // {0,(3t-1)/2,31t+14,(71t+35)/2}
    {L(0, 0), L(3, 0), H(61, 29), L(55, 30)},  // {0,3t,(61t+29)/2,55t+30}
    {L(0, 0), L(3, 1), L(39, 22), H(113, 63)},  // {0,3t+1,39t+22,(113t+63)/2}
    {L(0, 0), H(7, 5), L(15, 9), H(141, 79)},  // {0,(7t+5)/2,15t+9,(141t+79)/2}
    {L(0, 0), L(4, 3), L(11, 7), L(33, 17)},  // {0,4t+3,11t+7,33t+17}
    {L(0, 0), L(4, 4), L(36, 22), L(39, 21)},  // {0,4t+4,36t+22,39t+21}
    {L(0, 0), L(5, 4), L(8, 7), L(24, 16)},  // {0,5t+4,8t+7,24t+16}
    {L(0, 0), L(5, 5), L(25, 16), L(37, 24)},  // {0,5t+5,25t+16,37t+24}
    {L(0, 0), L(7, 2), L(31, 15), L(56, 30)},  // {0,7t+2,31t+15,56t+30}
    {L(0, 0), H(15, 7), H(43, 19), L(31, 17)},  // {0,(15t+7)/2,(43t+19)/2,31t+17}
    {L(0, 0), L(8, 4), L(19, 9), L(22, 11)},  // {0,8t+4,19t+9,22t+11}
    {L(0, 0), L(8, 5), L(12, 7), L(57, 32)},  // {0,8t+5,12t+7,57t+32}
    {L(0, 0), L(8, 9), L(23, 14), L(49, 30)},  // {0,8t+9,23t+14,49t+30}
    {L(0, 0), L(12, 6), L(31, 16), L(55, 31)},  // {0,12t+6,31t+16,55t+31}
    {L(0, 0), H(25, 15), L(35, 18), L(41, 22)},  // {0,(25t+15)/2,35t+18,41t+22}
    {L(0, 0), L(13, 7), L(28, 14), L(64, 37)},  // {0,13t+7,28t+14,64t+37}
    {L(0, 0), L(15, 6), L(21, 9), L(34, 17)},  // {0,15t+6,21t+9,34t+17}
    {L(0, 0), L(16, 8), L(24, 14), L(46, 23)},  // {0,16t+8,24t+14,46t+23}
    {L(0, 0), L(23, 11), L(30, 14), L(41, 20)},  // {0,23t+11,30t+14,41t+20}
};

// v = 72t+12x+4, x=3, t even (21 blocks)
constexpr SporadicBlock kQuotient3Even[] = {
    {L(0, 0), L(0, 1), L(8, 10), L(11, 7)},  // {0,1,8t+10,11t+7}
    {L(0, 0), L(0, 2), L(37, 24), L(68, 38)},  // {0,2,37t+24,68t+38}
    {L(0, 0), H(3, 0), H(45, 20), H(61, 28)},  // {0,(3t)/2,(45t)/2+10,(61t)/2+14}
    {L(0, 0), H(3, 4), H(19, 20), H(113, 64)},  // {0,(3t)/2+2,(19t)/2+10,(113t)/2+32}
    {L(0, 0), L(3, -2), L(15, 6), L(46, 23)},  // {0,3t-2,15t+6,46t+23}
    {L(0, 0), L(3, -1), L(19, 9), L(22, 11)},  // {0,3t-1,19t+9,22t+11}
    {L(0, 0), L(3, 1), L(16, 8), L(34, 17)},  // {0,3t+1,16t+8,34t+17}
    {L(0, 0), L(3, 3), L(23, 13), L(31, 18)},  // {0,3t+3,23t+13,31t+18}
    {L(0, 0), H(7, 6), L(33, 17), L(66, 35)},  // {0,(7t)/2+3,33t+17,66t+35}
    {L(0, 0), H(9, 6), H(15, 6), H(23, 12)},  // {0,(9t)/2+3,(15t)/2+3,(23t)/2+6}
    {L(0, 0), L(5, 3), L(36, 23), L(58, 33)},  // {0,5t+3,36t+23,58t+33}
    {L(0, 0), L(5, 4), L(25, 15), L(49, 30)},  // {0,5t+4,25t+15,49t+30}
    {L(0, 0), L(6, 4), H(55, 28), L(37, 23)},  // {0,6t+4,(55t)/2+14,37t+23}
    {L(0, 0), L(7, 2), L(15, 9), L(30, 14)},  // {0,7t+2,15t+9,30t+14}
    {L(0, 0), L(7, 4), L(15, 7), L(39, 21)},  // {0,7t+4,15t+7,39t+21}
    {L(0, 0), L(8, 6), L(23, 14), H(49, 30)},  // {0,8t+6,23t+14,(49t)/2+15}
    {L(0, 0), L(12, 7), L(24, 13), L(50, 31)},  // {0,12t+7,24t+13,50t+31}
    {L(0, 0), L(13, 8), H(73, 44), L(49, 29)},  // {0,13t+8,(73t)/2+22,49t+29}
    {L(0, 0), L(16, 9), L(30, 15), L(47, 24)},  // {0,16t+9,30t+15,47t+24}
    {L(0, 0), H(35, 18), H(57, 28), H(107, 62)},  // {0,(35t)/2+9,(57t)/2+14,(107t)/2+31}
    {L(0, 0), L(19, 11), L(24, 16), L(51, 31)},  // {0,19t+11,24t+16,51t+31}
};

// v = 72t+12x+4, x=4, t odd (22 blocks)
constexpr SporadicBlock kQuotient4Odd[] = {
    {L(0, 0), H(3, -3), H(19, 15), H(101, 73)},  // {0,(3t-3)/2,(19t+15)/2,(101t+73)/2}
    {L(0, 0), H(3, -1), L(11, 6), H(119, 81)},  // {0,(3t-1)/2,11t+6,(119t+81)/2}
    {L(0, 0), H(3, 1), L(26, 18), H(107, 73)},  // {0,(3t+1)/2,26t+18,(107t+73)/2}
    {L(0, 0), L(3, -1), L(27, 17), L(54, 36)},  // {0,3t-1,27t+17,54t+36}
    {L(0, 0), L(3, 1), L(27, 18), L(39, 29)},  // {0,3t+1,27t+18,39t+29}
    {L(0, 0), L(3, 2), L(26, 19), H(135, 97)},  // {0,3t+2,26t+19,(135t+97)/2}
    {L(0, 0), L(3, 3), L(8, 8), L(39, 30)},  // {0,3t+3,8t+8,39t+30}
    {L(0, 0), L(5, 3), L(18, 14), L(47, 35)},  // {0,5t+3,18t+14,47t+35}
    {L(0, 0), L(5, 4), L(21, 16), L(28, 19)},  // {0,5t+4,21t+16,28t+19}
    {L(0, 0), L(6, 3), H(45, 29), H(85, 63)},  // {0,6t+3,(45t+29)/2,(85t+63)/2}
    {L(0, 0), L(6, 4), L(41, 28), L(55, 38)},  // {0,6t+4,41t+28,55t+38}
    {L(0, 0), L(7, 5), L(11, 8), L(23, 16)},  // {0,7t+5,11t+8,23t+16}
    {L(0, 0), L(8, 6), L(12, 10), L(15, 10)},  // {0,8t+6,12t+10,15t+10}
    {L(0, 0), L(8, 7), L(38, 28), L(42, 30)},  // {0,8t+7,38t+28,42t+30}
    {L(0, 0), H(19, 17), H(35, 27), H(113, 83)},  // {0,(19t+17)/2,(35t+27)/2,(113t+83)/2}
    {L(0, 0), L(11, 5), L(19, 15), L(54, 37)},  // {0,11t+5,19t+15,54t+37}
    {L(0, 0), L(17, 12), L(17, 13), L(36, 29)},  // {0,17t+12,17t+13,36t+29}
    {L(0, 0), H(23, 17), L(15, 11), L(40, 29)},  // {0,(23t+17)/2,15t+11,40t+29}
    {L(0, 0), L(12, 9), L(40, 30), L(47, 32)},  // {0,12t+9,40t+30,47t+32}
    {L(0, 0), L(12, 12), L(15, 9), L(65, 46)},  // {0,12t+12,15t+9,65t+46}
    {L(0, 0), L(13, 12), L(16, 10), L(55, 41)},  // {0,13t+12,16t+10,55t+41}
    {L(0, 0), L(11, 7), L(11, 9), L(39, 27)},  // {0,11t+7,11t+9,39t+27}
};

// v = 72t+12x+4, x=4, t even (22 blocks)
constexpr SporadicBlock kQuotient4Even[] = {
    {L(0, 0), L(0, 1), H(3, 4), L(64, 44)},  // {0,1,(3t)/2+2,64t+44}
    {L(0, 0), L(0, 2), L(19, 18), L(69, 55)},  // {0,2,19t+18,69t+55}
    {L(0, 0), H(3, 0), L(5, 3), H(33, 22)},  // {0,(3t)/2,5t+3,(33t)/2+11}
    {L(0, 0), L(3, -2), L(11, 8), L(15, 10)},  // {0,3t-2,11t+8,15t+10}
    {L(0, 0), L(29, 21), L(32, 24), L(36, 27)},  // {0,29t+21,32t+24,36t+27}
    {L(0, 0), H(9, 6), L(27, 17), L(32, 21)},  // {0,(9t)/2+3,27t+17,32t+21}
    {L(0, 0), L(6, 4), L(23, 18), L(44, 34)},  // {0,6t+4,23t+18,44t+34}
    {L(0, 0), L(20, 17), L(31, 22), L(55, 39)},  // {0,20t+17,31t+22,55t+39}
    {L(0, 0), L(12, 11), L(39, 30), L(56, 42)},  // {0,12t+11,39t+30,56t+42}
    {L(0, 0), H(19, 16), L(31, 24), L(58, 42)},  // {0,(19t)/2+8,31t+24,58t+42}
    {L(0, 0), H(31, 20), L(23, 15), H(83, 60)},  // {0,(31t)/2+10,23t+15,(83t)/2+30}
    {L(0, 0), L(12, 8), L(25, 19), L(69, 51)},  // {0,12t+8,25t+19,69t+51}
    {L(0, 0), L(8, 5), L(12, 9), L(47, 32)},  // {0,8t+5,12t+9,47t+32}
    {L(0, 0), L(13, 12), L(19, 17), L(30, 23)},  // {0,13t+12,19t+17,30t+23}
    {L(0, 0), L(14, 11), L(30, 22), L(38, 29)},  // {0,14t+11,30t+22,38t+29}
    {L(0, 0), H(19, 18), H(25, 22), H(85, 64)},  // {0,(19t)/2+9,(25t)/2+11,(85t)/2+32}
    {L(0, 0), H(35, 26), H(49, 34), L(61, 45)},  // {0,(35t)/2+13,(49t)/2+17,61t+45}
    {L(0, 0), L(18, 14), L(25, 17), L(54, 37)},  // {0,18t+14,25t+17,54t+37}
    {L(0, 0), L(7, 2), L(25, 18), L(46, 33)},  // {0,7t+2,25t+18,46t+33}
    {L(0, 0), L(23, 14), L(28, 19), L(35, 24)},  // {0,23t+14,28t+19,35t+24}
    {L(0, 0), L(23, 17), L(31, 23), L(42, 32)},  // {0,23t+17,31t+23,42t+32}
    {L(0, 0), L(3, 0), L(23, 16), L(39, 28)},  // {0,3t,23t+16,39t+28}
};

// v = 72t+12x+4, x=5, t odd (23 blocks)
constexpr SporadicBlock kQuotient5Odd[] = {
    {L(0, 0), L(0, 1), L(3, -2), L(36, 30)},  // {0,1,3t-2,36t+30}
    {L(0, 0), L(0, 2), L(24, 23), L(64, 58)},  // {0,2,24t+23,64t+58}
    {L(0, 0), H(3, -3), L(29, 23), L(64, 53)},  // {0,(3t-3)/2,29t+23,64t+53}
    {L(0, 0), H(3, -1), L(3, 0), H(43, 33)},  // {0,(3t-1)/2,3t,(43t+33)/2}
    {L(0, 0), L(11, 10), L(16, 14), L(33, 29)},  // {0,11t+10,16t+14,33t+29}
    {L(0, 0), L(4, 2), H(33, 31), H(137, 123)},  // {0,4t+2,(33t+31)/2,(137t+123)/2}
    {L(0, 0), L(4, 3), L(7, 4), L(58, 52)},  // {0,4t+3,7t+4,58t+52}
    {L(0, 0), L(4, 5), L(16, 16), L(61, 58)},  // {0,4t+5,16t+16,61t+58}
    {L(0, 0), L(5, 5), H(45, 41), L(27, 25)},  // {0,5t+5,(45t+41)/2,27t+25}
    {L(0, 0), L(6, 4), L(31, 27), L(60, 51)},  // {0,6t+4,31t+27,60t+51}
    {L(0, 0), L(15, 13), L(31, 26), L(61, 53)},  // {0,15t+13,31t+26,61t+53}
    {L(0, 0), L(22, 21), L(30, 25), L(43, 38)},  // {0,22t+21,30t+25,43t+38}
    {L(0, 0), H(19, 15), H(57, 47), H(83, 75)},  // {0,(19t+15)/2,(57t+47)/2,(83t+75)/2}
    {L(0, 0), L(11, 7), H(71, 59), L(47, 40)},  // {0,11t+7,(71t+59)/2,47t+40}
    {L(0, 0), L(11, 8), L(23, 20), L(64, 54)},  // {0,11t+8,23t+20,64t+54}
    {L(0, 0), L(3, -1), L(8, 5), L(53, 45)},  // {0,3t-1,8t+5,53t+45}
    {L(0, 0), L(12, 14), L(19, 17), L(50, 48)},  // {0,12t+14,19t+17,50t+48}
    {L(0, 0), L(14, 13), L(38, 33), L(41, 36)},  // {0,14t+13,38t+33,41t+36}
    {L(0, 0), L(6, 5), H(59, 51), H(125, 111)},  // {0,6t+5,(59t+51)/2,(125t+111)/2}
    {L(0, 0), L(15, 14), L(23, 21), L(39, 36)},  // {0,15t+14,23t+21,39t+36}
    {L(0, 0), L(22, 17), L(30, 26), L(47, 42)},  // {0,22t+17,30t+26,47t+42}
    {L(0, 0), L(7, 5), L(11, 9), L(44, 40)},  // {0,7t+5,11t+9,44t+40}
    {L(0, 0), L(26, 23), L(29, 25), L(41, 35)},  // {0,26t+23,29t+25,41t+35}
};

// v = 72t+12x+4, x=5, t even (23 blocks)
constexpr SporadicBlock kQuotient5Even[] = {
    {L(0, 0), L(0, 2), L(39, 36), L(60, 52)},  // {0,2,39t+36,60t+52}
    {L(0, 0), L(19, 19), L(22, 16), L(22, 17)},  // {0,19t+19,22t+16,22t+17}
    {L(0, 0), H(3, 2), H(19, 18), L(25, 22)},  // {0,(3t)/2+1,(19t)/2+9,25t+22}
    {L(0, 0), L(3, 0), H(15, 8), L(11, 7)},  // {0,3t,(15t)/2+4,11t+7}
    {L(0, 0), L(3, 1), L(14, 12), L(22, 18)},  // {0,3t+1,14t+12,22t+18}
    {L(0, 0), L(3, 2), H(61, 52), L(55, 48)},  // {0,3t+2,(61t)/2+26,55t+48}
    {L(0, 0), L(3, 3), L(14, 13), L(50, 44)},  // {0,3t+3,14t+13,50t+44}
    {L(0, 0), L(4, 4), L(11, 8), L(19, 18)},  // {0,4t+4,11t+8,19t+18}
    {L(0, 0), L(5, 4), L(43, 39), L(49, 44)},  // {0,5t+4,43t+39,49t+44}
    {L(0, 0), L(5, 5), L(27, 24), L(31, 29)},  // {0,5t+5,27t+24,31t+29}
    {L(0, 0), L(5, 6), L(20, 17), L(32, 28)},  // {0,5t+6,20t+17,32t+28}
    {L(0, 0), L(6, 6), L(47, 40), L(55, 49)},  // {0,6t+6,47t+40,55t+49}
    {L(0, 0), L(7, 3), L(29, 24), L(36, 29)},  // {0,7t+3,29t+24,36t+29}
    {L(0, 0), L(12, 13), L(15, 12), L(48, 43)},  // {0,12t+13,15t+12,48t+43}
    {L(0, 0), L(8, 11), L(16, 16), L(32, 31)},  // {0,8t+11,16t+16,32t+31}
    {L(0, 0), L(11, 6), L(41, 33), L(54, 47)},  // {0,11t+6,41t+33,54t+47}
    {L(0, 0), L(11, 9), L(37, 34), L(53, 48)},  // {0,11t+9,37t+34,53t+48}
    {L(0, 0), H(23, 20), L(30, 26), H(119, 102)},  // {0,(23t)/2+10,30t+26,(119t)/2+51}
    {L(0, 0), L(8, 4), L(21, 17), L(39, 32)},  // {0,8t+4,21t+17,39t+32}
    {L(0, 0), L(15, 13), H(33, 30), L(39, 35)},  // {0,15t+13,(33t)/2+15,39t+35}
    {L(0, 0), H(35, 30), H(43, 34), H(125, 108)},  // {0,(35t)/2+15,(43t)/2+17,(125t)/2+54}
    {L(0, 0), H(3, 0), H(57, 46), L(38, 34)},  // {0,(3t)/2,(57t)/2+23,38t+34}
    {L(0, 0), L(25, 25), L(37, 35), L(41, 38)},  // {0,25t+25,37t+35,41t+38}
};
//                      a1  a2  a3   b1  b2  b3   c1  c2  c3   d1  d2  d3   e1  e2  e3   f1  f2  f3
constexpr OffsetTable kYangLin{0, {0,  1,  2,   0,  1,  1,   0,  0,  0,   0,  0,  1,   2,  1,  2,   0,  0,  0}};

// v = 72t+12x+1
constexpr std::array<OffsetTable, 5> kOneMod12Offsets{{
    {1, { 8,  7,  5,   4,  3,  4,   9,  6,  3,   5,  2,  1,  10,  3,  2,   2,  1,  0}},
    {2, {16, 14,  8,  10,  4,  7,  15, 11,  6,  12,  3,  1,  17,  9,  2,   6,  4,  0}},
    {3, {25, 20, 10,  14,  5,  8,  24, 18,  9,  17,  4,  1,  24, 11,  2,  12,  7,  0}},
    {4, {31, 24, 10,  18,  7,  8,  30, 20,  9,  23,  6,  1,  32, 13,  2,  16, 11,  0}},
    {5, {38, 30, 11,  21,  8,  9,  37, 24, 10,  29,  7,  1,  40, 17,  2,  18, 13,  0}},
}};

// v = 72t+12x+4
constexpr std::array<OffsetTable, 6> kFourMod12Offsets{{
    {0, { 2,  2,  2,   2,  1,  1,   1,  2,  0,   0,  0,  1,   3,  2,  2,   1,  0,  0}},
    {1, {10,  7,  5,   6,  3,  4,   9,  6,  3,   7,  2,  1,  11,  5,  2,   4,  1,  0}},
    {2, {18, 14,  8,  10,  4,  7,  17, 11,  6,  12,  3,  1,  18,  9,  2,   8,  6,  0}},
    {3, {26, 20, 10,  14,  5,  8,  26, 18,  9,  18,  4,  1,  25, 11,  2,  10,  7,  0}},
    {4, {32, 24, 10,  18,  5,  8,  30, 20,  9,  24,  4,  1,  35, 17,  2,  16, 11,  0}},
    {5, {41, 31, 11,  21,  6,  9,  38, 25, 10,  30,  5,  1,  42, 18,  2,  17, 13,  0}},
}};

// [x][t odd]
constexpr std::array<std::array<std::span<const SporadicBlock>, 2>, 5> kOneMod12Sporadic{{
    {{kCdf1Even, kCdf1Odd}},
    {{kCdf2Even, kCdf2Odd}},
    {{kCdf3Even, kCdf3Odd}},
    {{kCdf4Even, kCdf4Odd}},
    {{kCdf5Even, kCdf5Odd}},
}};

constexpr std::array<std::array<std::span<const SporadicBlock>, 2>, 6> kFourMod12Sporadic{{
    {{kQuotient0Even, kQuotient0Odd}},
    {{kQuotient1Even, kQuotient1Odd}},
    {{kQuotient2Even, kQuotient2Odd}},
    {{kQuotient3Even, kQuotient3Odd}},
    {{kQuotient4Even, kQuotient4Odd}},
    {{kQuotient5Even, kQuotient5Odd}},
}};

}  // namespace

const OffsetTable& yang_lin_offsets() { return kYangLin; }

const OffsetTable& offsets(Series series, int x) {
  switch (series) {
    case Series::OneMod72: return kYangLin;
    case Series::OneMod12:
      if (x < 1 || x > 5) throw Error(Errc::domain, "x must be in [1,5] for v = 72t+12x+1");
      return kOneMod12Offsets[static_cast<std::size_t>(x - 1)];
    case Series::FourMod12:
      if (x < 0 || x > 5) throw Error(Errc::domain, "x must be in [0,5] for v = 72t+12x+4");
      return kFourMod12Offsets[static_cast<std::size_t>(x)];
  }
  throw Error(Errc::domain, "unknown series");
}

std::span<const SporadicBlock> sporadic(Series series, int x, bool t_odd) {
  const auto par = static_cast<std::size_t>(t_odd);
  switch (series) {
    case Series::OneMod72: return t_odd ? std::span<const SporadicBlock>(kOneMod72Odd) : kOneMod72Even;
    case Series::OneMod12:
      if (x < 1 || x > 5) throw Error(Errc::domain, "x must be in [1,5] for v = 72t+12x+1");
      return kOneMod12Sporadic[static_cast<std::size_t>(x - 1)][par];
    case Series::FourMod12:
      if (x < 0 || x > 5) throw Error(Errc::domain, "x must be in [0,5] for v = 72t+12x+4");
      return kFourMod12Sporadic[static_cast<std::size_t>(x)][par];
  }
  throw Error(Errc::domain, "unknown series");
}

}  // namespace cdf::tables
