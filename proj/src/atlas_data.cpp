// Frozen transcription of the fourteen basic maps. Points are edge-ends (darts):
// x swaps the two ends of an edge, y turns anticlockwise about a vertex, t is the
// mirror of the drawing. Labels are arbitrary; only invariants are checked.

#include "atlas_data.hpp"

namespace dhb::detail {

const RawMap raw_maps[14] = {
    {14,
         "(0 1)(2 3)(4 5)(6 7)(10 11)(12 13)",
         "(0 5 10)(1 12 2)(3 4 6)(7 8 9)",
         "(0 1)(2 5)(3 4)(8 9)(10 12)(11 13)"},
    {15,
         "(0 1)(2 3)(4 5)(6 7)(11 12)(13 14)",
         "(0 10 7)(1 2 9)(3 11 4)(5 6 8)(12 13 14)",
         "(0 7)(1 6)(2 5)(3 4)(8 9)(13 14)"},
    {21,
         "(0 1)(2 3)(4 5)(6 7)(8 9)(13 14)(15 16)(17 18)",
         "(0 9 13)(1 2 10)(3 12 4)(5 6 11)(7 16 8)(14 17 15)(18 19 20)",
         "(0 7)(1 6)(2 5)(3 4)(8 9)(10 11)(13 16)(14 15)(19 20)"},
    {22,
         "(0 1)(2 3)(4 5)(6 7)(8 9)(12 13)(14 15)(16 17)(18 19)(20 21)",
         "(0 9 16)(1 12 2)(3 19 4)(5 6 11)(7 8 10)(13 20 21)(15 18 17)",
         "(0 3)(1 2)(4 9)(5 8)(6 7)(10 11)(16 19)(17 18)(20 21)"},
    {28,
         "(0 1)(2 3)(4 5)(6 7)(8 9)(10 11)(12 13)(14 15)(16 17)(18 19)(20 21)(26 27)",
         "(0 5 16)(1 18 2)(3 4 20)(6 15 17)(7 8 24)(9 10 25)(11 19 12)(13 26 14)(21 22 23)",
         "(0 1)(2 5)(3 4)(6 11)(7 10)(8 9)(12 15)(13 14)(16 18)(17 19)(22 23)(24 25)"},
    {30,
         "(0 1)(2 3)(4 5)(6 7)(8 9)(12 13)(14 15)(16 17)(18 19)(20 21)(22 23)(24 25)(26 27)(28 29)",
         "(0 9 18)(1 12 2)(3 25 4)(5 6 11)(7 8 10)(13 21 22)(14 15 27)(16 17 29)(19 20 26)(23 24 28)",
         "(0 3)(1 2)(4 9)(5 8)(6 7)(10 11)(14 17)(15 16)(18 25)(19 24)(20 23)(21 22)(26 28)(27 29)"},
    {42,
         "(0 1)(2 3)(4 5)(6 7)(10 11)(12 13)(14 15)(16 17)(20 21)(22 23)(24 25)(26 27)(30 31)(32 33)"
         "(34 35)(36 37)(38 39)(40 41)",
         "(0 5 30)(1 34 2)(3 4 6)(7 8 9)(10 15 38)(11 40 12)(13 14 16)(17 18 19)(20 25 33)(21 37 22)"
         "(23 24 26)(27 28 29)(31 39 32)(35 36 41)",
         "(0 1)(2 5)(3 4)(8 9)(10 11)(12 15)(13 14)(18 19)(20 21)(22 25)(23 24)(28 29)(30 34)(31 35)"
         "(32 36)(33 37)(38 40)(39 41)"},
    {42,
         "(0 1)(2 3)(4 5)(6 7)(10 11)(12 13)(14 15)(16 17)(18 19)(22 23)(24 25)(26 27)(28 29)(30 31)"
         "(32 33)(34 35)(36 37)(38 39)",
         "(0 5 24)(1 35 2)(3 4 6)(7 8 9)(10 19 36)(11 38 12)(13 14 21)(15 23 16)(17 18 20)(22 30 29)"
         "(25 37 26)(27 40 28)(31 41 32)(33 39 34)",
         "(0 1)(2 5)(3 4)(8 9)(10 11)(12 19)(13 18)(14 17)(15 16)(20 21)(24 35)(25 34)(26 33)(27 32)"
         "(28 31)(29 30)(36 38)(37 39)(40 41)"},
    {57,
         "(0 1)(2 3)(4 5)(6 7)(8 9)(13 14)(15 16)(17 18)(19 20)(21 22)(25 26)(27 28)(29 30)(31 32)(33 34)"
         "(35 36)(37 38)(39 40)(41 42)(43 44)(45 46)(47 48)(49 50)(51 52)(53 54)(55 56)",
         "(0 9 41)(1 12 2)(3 48 4)(5 6 11)(7 8 10)(13 22 53)(14 50 15)(16 55 17)(18 19 24)(20 21 23)"
         "(25 32 54)(26 27 33)(28 56 29)(30 52 31)(34 35 36)(37 43 42)(38 39 49)(40 47 46)(44 51 45)",
         "(0 3)(1 2)(4 9)(5 8)(6 7)(10 11)(13 16)(14 15)(17 22)(18 21)(19 20)(23 24)(25 28)(26 27)(29 32)"
         "(30 31)(35 36)(37 40)(38 39)(41 48)(42 47)(43 46)(44 45)(53 55)(54 56)"},
    {72,
         "(0 1)(2 3)(4 5)(6 7)(10 11)(12 13)(14 15)(16 17)(18 19)(20 21)(22 23)(24 25)(26 27)(28 29)"
         "(30 31)(32 33)(34 35)(36 37)(38 39)(40 41)(44 45)(46 47)(48 49)(50 51)(52 53)(54 55)(56 57)"
         "(58 59)(60 61)(62 63)(64 65)(66 67)(68 69)(70 71)",
         "(0 5 52)(1 2 6)(3 60 4)(7 9 8)(10 17 44)(11 12 18)(13 46 14)(15 70 16)(19 20 21)(22 29 48)"
         "(23 71 24)(25 50 26)(27 28 30)(31 32 33)(34 39 59)(35 67 36)(37 38 40)(41 42 43)(45 54 53)"
         "(47 61 62)(49 58 57)(51 65 66)(55 56 68)(63 69 64)",
         "(0 3)(1 2)(4 5)(8 9)(10 13)(11 12)(14 17)(15 16)(20 21)(22 25)(23 24)(26 29)(27 28)(32 33)"
         "(34 35)(36 39)(37 38)(42 43)(44 46)(45 47)(48 50)(49 51)(52 60)(53 61)(54 62)(55 63)(56 64)"
         "(57 65)(58 66)(59 67)(68 69)"},
    {72,
         "(0 1)(2 3)(4 5)(6 7)(10 11)(12 13)(14 15)(16 17)(18 19)(20 21)(22 23)(24 25)(26 27)(28 29)"
         "(30 31)(32 33)(34 35)(36 37)(38 39)(40 41)(42 43)(44 45)(46 47)(48 49)(50 51)(52 53)(54 55)"
         "(56 57)(60 61)(62 63)(64 65)(66 67)(68 69)(70 71)",
         "(0 5 71)(1 60 2)(3 4 6)(7 8 9)(10 17 48)(11 55 12)(13 47 14)(15 16 18)(19 20 21)(22 29 43)"
         "(23 53 24)(25 51 26)(27 28 30)(31 32 33)(34 69 70)(35 36 52)(37 38 54)(39 61 62)(40 67 68)"
         "(41 58 42)(44 63 64)(45 46 59)(49 57 50)(56 65 66)",
         "(0 1)(2 5)(3 4)(8 9)(10 25)(11 24)(12 23)(13 22)(14 29)(15 28)(16 27)(17 26)(18 30)(19 31)"
         "(20 33)(21 32)(34 39)(35 38)(36 37)(40 44)(41 45)(42 46)(43 47)(48 51)(49 50)(52 54)(53 55)"
         "(58 59)(60 71)(61 70)(62 69)(63 68)(64 67)(65 66)"},
    {102,
         "(0 1)(2 3)(4 5)(6 7)(8 9)(10 11)(12 13)(14 15)(16 17)(18 19)(20 21)(22 23)(24 25)(26 27)(28 29)"
         "(30 31)(32 33)(36 37)(38 39)(40 41)(42 43)(44 45)(46 47)(48 49)(50 51)(52 53)(54 55)(56 57)"
         "(58 59)(60 61)(62 63)(64 65)(66 67)(68 69)(70 71)(72 73)(74 75)(76 77)(78 79)(80 81)(82 83)"
         "(84 85)(86 87)(88 89)(90 91)(92 93)(94 95)(96 97)(98 99)(100 101)",
         "(0 7 86)(1 98 2)(3 65 4)(5 6 8)(9 10 11)(12 19 71)(13 101 14)(15 91 16)(17 18 20)(21 22 23)"
         "(24 33 60)(25 97 26)(27 66 28)(29 30 35)(31 32 34)(36 43 83)(37 38 44)(39 78 40)(41 93 42)"
         "(45 46 47)(48 55 81)(49 50 56)(51 85 52)(53 95 54)(57 58 59)(61 72 62)(63 82 64)(67 68 75)"
         "(69 70 84)(73 74 76)(77 80 79)(87 92 88)(89 94 90)(96 99 100)",
         "(0 15)(1 14)(2 13)(3 12)(4 19)(5 18)(6 17)(7 16)(8 20)(9 21)(10 23)(11 22)(24 27)(25 26)(28 33)"
         "(29 32)(30 31)(34 35)(36 51)(37 50)(38 49)(39 48)(40 55)(41 54)(42 53)(43 52)(44 56)(45 57)"
         "(46 59)(47 58)(60 66)(61 67)(62 68)(63 69)(64 70)(65 71)(72 75)(73 74)(78 81)(79 80)(82 84)"
         "(83 85)(86 91)(87 90)(88 89)(92 94)(93 95)(98 101)(99 100)"},
    {108,
         "(0 1)(2 3)(4 5)(6 7)(8 9)(10 11)(12 13)(14 15)(16 17)(18 19)(20 21)(22 23)(24 25)(26 27)(28 29)"
         "(30 31)(34 35)(36 37)(38 39)(40 41)(42 43)(46 47)(48 49)(50 51)(52 53)(54 55)(56 57)(58 59)"
         "(60 61)(62 63)(64 65)(66 67)(68 69)(70 71)(72 73)(74 75)(76 77)(78 79)(80 81)(82 83)(84 85)"
         "(86 87)(88 89)(90 91)(92 93)(94 95)(96 97)(98 99)(100 101)(102 103)(104 105)(106 107)",
         "(0 7 80)(1 94 2)(3 58 4)(5 6 8)(9 10 11)(12 19 65)(13 101 14)(15 82 16)(17 18 20)(21 22 23)"
         "(24 29 76)(25 78 26)(27 28 30)(31 32 33)(34 43 103)(35 36 44)(37 38 45)(39 105 40)(41 67 42)"
         "(46 53 84)(47 48 54)(49 93 50)(51 107 52)(55 56 57)(59 60 68)(61 66 62)(63 64 72)(69 77 70)"
         "(71 88 87)(73 74 79)(75 90 89)(81 86 85)(83 92 91)(95 96 102)(97 106 98)(99 100 104)",
         "(0 15)(1 14)(2 13)(3 12)(4 19)(5 18)(6 17)(7 16)(8 20)(9 21)(10 23)(11 22)(24 25)(26 29)(27 28)"
         "(32 33)(34 39)(35 38)(36 37)(40 43)(41 42)(44 45)(46 49)(47 48)(50 53)(51 52)(56 57)(58 65)"
         "(59 64)(60 63)(61 62)(68 72)(69 73)(70 74)(71 75)(76 78)(77 79)(80 82)(81 83)(84 93)(85 92)"
         "(86 91)(87 90)(88 89)(94 101)(95 100)(96 99)(97 98)(102 104)(103 105)"},
    {108,
         "(0 1)(2 3)(4 5)(6 7)(8 9)(12 13)(14 15)(16 17)(18 19)(20 21)(22 23)(24 25)(26 27)(28 29)(30 31)"
         "(32 33)(34 35)(36 37)(38 39)(40 41)(42 43)(44 45)(46 47)(48 49)(50 51)(52 53)(54 55)(58 59)"
         "(60 61)(62 63)(64 65)(66 67)(68 69)(70 71)(72 73)(74 75)(76 77)(78 79)(80 81)(82 83)(84 85)"
         "(86 87)(88 89)(90 91)(92 93)(94 95)(96 97)(98 99)(100 101)(102 103)(104 105)(106 107)",
         "(0 9 58)(1 64 2)(3 4 11)(5 83 6)(7 8 10)(12 19 84)(13 89 14)(15 86 16)(17 18 20)(21 22 23)"
         "(24 31 94)(25 90 26)(27 63 28)(29 30 32)(33 34 35)(36 43 69)(37 93 38)(39 96 40)(41 42 44)"
         "(45 46 47)(48 53 98)(49 107 50)(51 52 54)(55 56 57)(59 60 85)(61 70 62)(65 87 66)(67 68 72)"
         "(71 76 75)(73 80 79)(74 99 100)(77 82 78)(81 105 106)(88 91 92)(95 101 102)(97 103 104)",
         "(0 1)(2 9)(3 8)(4 7)(5 6)(10 11)(12 15)(13 14)(16 19)(17 18)(22 23)(24 39)(25 38)(26 37)(27 36)"
         "(28 43)(29 42)(30 41)(31 40)(32 44)(33 45)(34 47)(35 46)(48 49)(50 53)(51 52)(56 57)(58 64)"
         "(59 65)(60 66)(61 67)(62 68)(63 69)(70 72)(71 73)(74 81)(75 80)(76 79)(77 78)(84 86)(85 87)"
         "(90 93)(91 92)(94 96)(95 97)(98 107)(99 106)(100 105)(101 104)(102 103)"},
};

}  // namespace dhb::detail
