#pragma once

// The printed table of Yang-Lin differences, typed by hand, form by form:
// difference, its interval as i runs over the index range, and the negative
// interval where the printed table lists one.

namespace printed {

struct Row {
  const char* difference;
  const char* positive;
  const char* folded;  // "" when the printed table has no negative column entry
};

inline const Row kYangLinTable[36] = {
    {"43t+i", "[43t+1,44t-1]", "[28t+2,29t]"},
    {"31t+1+2i", "[31t+3,33t-1]_2", ""},
    {"8t+2+3i", "[8t+5,11t-1]_3", ""},
    {"12t-1-i", "[11t,12t-2]", ""},
    {"35t-2-2i", "[33t,35t-4]_2", ""},
    {"23t-1-i", "[22t,23t-2]", ""},

    {"23t+i", "[23t,24t-1]", ""},
    {"5t+1+2i", "[5t+1,7t-1]_2", ""},
    {"8t+1+3i", "[8t+1,11t-2]_3", ""},
    {"18t-1-i", "[17t,18t-1]", ""},
    {"15t-1-2i", "[13t+1,15t-1]_2", ""},
    {"3t+i", "[3t,4t-1]", ""},

    {"41t+i", "[41t+1,42t-1]", "[30t+2,31t]"},
    {"25t+2i", "[25t+2,27t-2]_2", ""},
    {"8t+3i", "[8t+3,11t-3]_3", ""},
    {"16t-i", "[15t+1,16t-1]", ""},
    {"33t-2i", "[31t+2,33t-2]_2", ""},
    {"17t-i", "[16t+1,17t-1]", ""},

    {"35t+i", "[35t,36t-1]", ""},
    {"5t+2i", "[5t,7t-2]_2", ""},
    {"1+3i", "[1,3t-2]_3", ""},
    {"30t-i", "[29t+1,30t]", ""},
    {"35t-1-2i", "[33t+1,35t-1]_2", ""},
    {"5t-1-i", "[4t,5t-1]", ""},

    {"47t+2+i", "[47t+2,48t+1]", "[24t,25t-1]"},
    {"19t+1+2i", "[19t+1,21t-1]_2", ""},
    {"2+3i", "[2,3t-1]_3", ""},
    {"28t+1-i", "[27t+2,28t+1]", ""},
    {"47t-2i", "[45t+2,47t]_2", "[25t+1,27t-1]_2"},
    {"19t-1-i", "[18t,19t-1]", ""},

    {"21t+i", "[21t+1,22t-1]", ""},
    {"13t+2i", "[13t+2,15t-2]_2", ""},
    {"3i", "[3,3t-3]_3", ""},
    {"8t-i", "[7t+1,8t-1]", ""},
    {"21t-2i", "[19t+2,21t-2]_2", ""},
    {"13t-i", "[12t+1,13t-1]", ""},
};

}  // namespace printed
