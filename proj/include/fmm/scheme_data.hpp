// Coefficient tables for the bundled multiplication schemes.
// Entries use the extended SMS syntax: "p/q" rational, trailing
// 's' multiplies by sqrt(3) (e.g. "-2/3s" is -2*sqrt(3)/3).
#pragma once

namespace fmm::data {

inline constexpr const char* strassen_L = R"(7 4 M
1 1 1
1 4 1
2 2 1
2 4 -1
3 1 -1
3 3 1
4 1 1
4 2 1
5 1 1
6 4 1
7 3 1
7 4 1
0 0 0)";
inline constexpr const char* strassen_R = R"(7 4 M
1 1 1
1 4 1
2 3 1
2 4 1
3 1 1
3 2 1
4 4 1
5 2 1
5 4 -1
6 1 -1
6 3 1
7 1 1
0 0 0)";
inline constexpr const char* strassen_P = R"(4 7 M
1 1 1
1 2 1
1 4 -1
1 6 1
2 4 1
2 5 1
3 6 1
3 7 1
4 1 1
4 3 1
4 5 1
4 7 -1
0 0 0)";

inline constexpr const char* winograd_L = R"(7 4 M
1 1 1
2 2 1
3 1 1
3 2 1
3 3 -1
3 4 -1
4 4 1
5 3 1
5 4 1
6 1 -1
6 3 1
6 4 1
7 1 1
7 3 -1
0 0 0)";
inline constexpr const char* winograd_R = R"(7 4 M
1 1 1
2 3 1
3 4 1
4 1 1
4 2 -1
4 3 -1
4 4 1
5 1 -1
5 2 1
6 1 1
6 2 -1
6 4 1
7 2 -1
7 4 1
0 0 0)";
inline constexpr const char* winograd_P = R"(4 7 M
1 1 1
1 2 1
2 1 1
2 3 1
2 5 1
2 6 1
3 1 1
3 4 -1
3 6 1
3 7 1
4 1 1
4 5 1
4 6 1
4 7 1
0 0 0)";

inline constexpr const char* asopt_L = R"(7 4 M
1 1 1/2s
1 2 1/2
1 3 1/2
1 4 1/6s
2 3 1
2 4 -1/3s
3 2 1
3 4 1/3s
4 4 -2/3s
5 1 -1/2s
5 2 -1/2
5 3 1/2
5 4 -1/2s
6 1 -1/2s
6 2 -1/2
6 3 1/2
6 4 1/6s
7 1 -1/2s
7 2 1/2
7 3 1/2
7 4 -1/6s
0 0 0)";
inline constexpr const char* asopt_R = R"(7 4 M
1 2 2/3s
2 1 -1
2 2 1/3s
3 2 1/3s
3 4 -1
4 1 1/2
4 2 -1/6s
4 3 1/2s
4 4 -1/2
5 1 -1/2
5 2 1/2s
5 3 -1/2s
5 4 -1/2
6 1 1/2
6 2 1/6s
6 3 1/2s
6 4 1/2
7 1 1/2
7 2 1/6s
7 3 -1/2s
7 4 -1/2
0 0 0)";
inline constexpr const char* asopt_P = R"(4 7 M
1 1 1/6s
1 2 -1/3s
1 3 1/3s
1 4 1/6s
1 5 1/2s
1 6 -1/6s
1 7 -2/3s
2 1 1/2
2 3 -1
2 4 -1/2
2 5 -1/2
2 6 -1/2
3 1 1/2
3 2 -1
3 4 -1/2
3 5 1/2
3 6 1/2
4 1 1/2s
4 4 1/2s
4 5 1/2s
4 6 1/2s
0 0 0)";

inline constexpr const char* powers_L = R"(7 4 M
1 2 -1
1 3 1
2 1 1
2 2 1/2
2 3 -1/2
2 4 -1/4
3 3 1
3 4 -1/2
4 2 1
4 4 -1/2
5 3 1
5 4 1/2
6 1 1
6 2 -1/2
6 3 1/2
6 4 -1/4
7 2 1
7 4 1/2
0 0 0)";
inline constexpr const char* powers_R = R"(7 4 M
1 1 1
1 4 -1
2 1 1
2 2 1/2
3 2 1/2
3 4 -1
4 1 1/2
4 2 1/4
4 3 -1
4 4 -1/2
5 2 1/2
5 4 1
6 1 1
6 2 -1/2
7 1 1/2
7 2 -1/4
7 3 1
7 4 -1/2
0 0 0)";
inline constexpr const char* powers_P = R"(4 7 M
1 2 1/2
1 3 1/4
1 4 -1/2
1 5 1/4
1 6 1/2
1 7 1/2
2 1 1
2 2 1
2 3 -1/2
2 5 1/2
2 6 -1
3 1 1
3 3 -1/2
3 4 1
3 5 1/2
3 7 1
4 3 1
4 5 1
0 0 0)";

inline constexpr const char* powrot_L = R"(7 4 M
1 1 4/9
1 2 -8/9
1 3 -8/9
1 4 -4/9
2 2 5/9
2 4 10/9
3 1 8/9
3 2 -2/3
4 1 4/9
4 2 2/9
4 3 8/9
4 4 4/9
5 2 -10/9
6 1 4/9
6 2 -1/3
6 3 -8/9
6 4 2/3
7 1 -4/9
7 2 -2/9
7 3 8/9
7 4 4/9
0 0 0)";
inline constexpr const char* powrot_R = R"(7 4 M
1 1 -3/5
1 2 4/5
1 3 -4/5
1 4 -3/5
2 2 1/2
2 4 -1
3 1 -1
3 2 1/2
4 2 5/4
5 1 3/5
5 2 -3/10
5 3 4/5
5 4 -2/5
6 1 2/5
6 2 3/10
6 3 -4/5
6 4 -3/5
7 1 -3/5
7 2 -9/20
7 3 -4/5
7 4 -3/5
0 0 0)";
inline constexpr const char* powrot_P = R"(4 7 M
1 1 9/20
1 3 -9/8
1 4 9/20
1 5 -27/40
1 7 9/20
2 1 9/10
2 4 9/10
2 5 9/10
2 7 9/10
3 1 9/10
3 2 27/40
3 3 -9/16
3 4 9/40
3 5 27/80
3 6 -9/8
3 7 -9/40
4 1 -9/20
4 2 -9/10
4 4 9/20
4 5 -9/20
4 7 -9/20
0 0 0)";

inline constexpr const char* a0695_L = R"(7 4 M
1 1 -167042/345665
1 2 295936/345665
1 3 -295936/345665
1 4 -167042/345665
2 1 -178623/345665
2 2 -51622047/176980480
2 3 295936/345665
2 4 167042/345665
3 2 -51622047/88490240
3 4 334084/345665
4 1 -1
4 2 289/512
5 2 289/256
6 1 -167042/345665
6 2 -24137569/88490240
6 3 -295936/345665
6 4 -167042/345665
7 1 -167042/345665
7 2 24137569/88490240
7 3 -295936/345665
7 4 167042/345665
0 0 0)";
inline constexpr const char* a0695_R = R"(7 4 M
1 1 -256/289
1 2 -1/2
1 3 1/2
1 4 -256/289
2 1 -345665/295936
3 1 -345665/591872
3 3 345665/334084
4 1 -178623/295936
4 2 -1
5 1 178623/591872
5 2 1/2
5 3 178623/334084
5 4 256/289
6 1 -289/1024
6 2 1/2
6 3 -1/2
6 4 256/289
7 1 -289/1024
7 2 1/2
7 3 1/2
7 4 -256/289
0 0 0)";
inline constexpr const char* a0695_P = R"(4 7 M
1 1 295936/345665
1 2 295936/345665
1 5 295936/345665
1 6 295936/345665
2 1 -178623/345665
2 2 -178623/345665
2 4 1
2 5 167042/345665
2 6 -178623/345665
3 1 178623/345665
3 2 -167042/345665
3 3 1
3 5 178623/345665
3 6 178623/345665
4 1 295936/345665
4 2 51622047/176980480
4 3 289/512
4 4 -289/512
4 5 51622047/176980480
4 6 -31906176129/102294717440
4 7 -345665/295936
0 0 0)";

inline constexpr const char* a0661_L = R"(7 4 M
1 1 33124/38165
1 2 19208/38165
1 3 -19208/38165
1 4 33124/38165
2 1 33124/38165
2 2 19208/38165
2 3 18957/38165
2 4 1857786/6449885
3 2 38416/38165
3 4 3715572/6449885
4 3 1
4 4 -98/169
5 4 196/169
6 1 33124/38165
6 2 19208/38165
6 3 -19208/38165
6 4 -1882384/6449885
7 1 33124/38165
7 2 -19208/38165
7 3 -19208/38165
7 4 1882384/6449885
0 0 0)";
inline constexpr const char* a0661_R = R"(7 4 M
1 1 -169/196
1 2 -1/2
1 3 1/2
1 4 -169/196
2 1 38165/33124
3 1 38165/66248
3 3 -38165/38416
4 1 18957/33124
4 2 1
5 1 18957/66248
5 2 1/2
5 3 18957/38416
5 4 169/196
6 1 -49/169
6 2 1/2
6 3 -1/2
6 4 169/196
7 1 -49/169
7 2 1/2
7 3 1/2
7 4 -169/196
0 0 0)";
inline constexpr const char* a0661_P = R"(4 7 M
1 1 -18957/38165
1 2 19208/38165
1 3 -1
1 5 -18957/38165
1 6 -18957/38165
2 1 -33124/38165
2 2 -1857786/6449885
2 3 -98/169
2 4 98/169
2 5 -1857786/6449885
2 6 359367849/1264177460
2 7 38165/33124
3 1 33124/38165
3 2 33124/38165
3 5 33124/38165
3 6 33124/38165
4 1 -18957/38165
4 2 -18957/38165
4 4 1
4 5 19208/38165
4 6 -18957/38165
0 0 0)";

inline constexpr const char* altcob_L = R"(4 4 M
1 4 2/3s
2 2 1
2 4 1/3s
3 3 1
3 4 -1/3s
4 1 -1/2s
4 2 -1/2
4 3 1/2
4 4 -1/2s
0 0 0)";
inline constexpr const char* altcob_R = R"(4 4 M
1 2 2/3s
2 1 1
2 2 -1/3s
3 2 1/3s
3 4 -1
4 1 -1/2
4 2 1/2s
4 3 -1/2s
4 4 -1/2
0 0 0)";
inline constexpr const char* altcob_P = R"(4 4 M
1 1 -2/3s
2 1 1/3s
2 2 -1
3 1 -1/3s
3 3 -1
4 1 1/2s
4 2 -1/2
4 3 1/2
4 4 1/2s
0 0 0)";

inline constexpr const char* altcore_L = R"(7 4 M
1 3 1
1 4 -1
2 3 1
3 2 1
4 1 -1
5 4 1
6 1 1
6 4 1
7 2 1
7 4 1
0 0 0)";
inline constexpr const char* altcore_R = R"(7 4 M
1 1 1
2 2 -1
3 3 1
4 3 1
4 4 -1
5 4 1
6 1 1
6 4 -1
7 2 1
7 4 1
0 0 0)";
inline constexpr const char* altcore_P = R"(4 7 M
1 6 1
1 7 1
2 1 -1
2 3 1
3 2 1
3 4 1
4 1 1
4 4 1
4 5 1
4 6 1
0 0 0)";

inline constexpr const char* smirnov336acc_L = R"(40 9 M
1 1 1
1 3 -1
1 5 1
1 6 -1
1 7 -1
1 8 1
2 1 1
2 3 1
2 5 1
2 6 -1
2 7 -1
2 8 -1
3 1 1
3 3 1
3 5 1
3 6 1
3 7 1
3 8 -1
4 1 1
4 3 -1
4 5 1
4 6 1
4 7 1
4 8 1
5 1 -1
5 3 -1
5 5 1
5 6 -1
5 7 1
5 8 1
6 1 -1
6 3 -1
6 5 1
6 6 1
6 7 -1
6 8 1
7 1 -1
7 3 1
7 5 1
7 6 -1
7 7 1
7 8 -1
8 1 -1
8 3 1
8 5 1
8 6 1
8 7 -1
8 8 -1
9 1 -1
9 3 1
9 5 1
9 6 -1
9 7 -1
9 8 1
10 1 -1
10 3 -1
10 5 1
10 6 1
10 7 1
10 8 -1
11 1 1
11 3 1
11 5 -1
11 6 1
11 7 1
11 8 1
12 1 -1
12 3 1
12 5 1
12 6 1
12 7 1
12 8 1
13 1 1
13 3 1
13 5 1
13 6 1
13 7 -1
13 8 1
14 1 1
14 3 1
14 5 1
14 6 -1
14 7 1
14 8 1
15 1 -1
15 3 1
15 5 -1
15 6 -1
15 7 1
15 8 1
16 1 -1
16 3 1
16 5 -1
16 6 1
16 7 -1
16 8 1
17 1 1
17 3 1
17 7 -1
17 9 -1
18 1 -1
18 3 -1
18 7 -1
18 9 -1
19 1 1
19 3 -1
19 7 1
19 9 -1
20 1 1
20 3 -1
20 7 -1
20 9 1
21 1 1
21 2 1
21 7 -1
21 8 -1
22 1 1
22 2 -1
22 7 1
22 8 -1
23 1 1
23 2 1
23 7 1
23 8 1
24 1 -1
24 2 1
24 7 1
24 8 -1
25 4 -1
25 5 -1
25 7 -1
25 8 -1
26 4 -1
26 5 1
26 7 -1
26 8 1
27 4 -1
27 5 1
27 7 1
27 8 -1
28 4 -1
28 5 -1
28 7 1
28 8 1
29 5 -1
29 6 1
29 8 -1
29 9 1
30 5 -1
30 6 -1
30 8 -1
30 9 -1
31 5 -1
31 6 -1
31 8 1
31 9 1
32 5 1
32 6 -1
32 8 -1
32 9 1
33 2 1
33 3 1
33 5 1
33 6 1
34 2 -1
34 3 1
34 5 1
34 6 -1
35 2 1
35 3 -1
35 5 1
35 6 -1
36 2 -1
36 3 -1
36 5 1
36 6 1
37 1 -1
37 3 1
37 4 1
37 6 -1
38 1 -1
38 3 -1
38 4 -1
38 6 -1
39 1 1
39 3 -1
39 4 1
39 6 -1
40 1 -1
40 3 -1
40 4 1
40 6 1
0 0 0)";
inline constexpr const char* smirnov336acc_R = R"(40 18 M
1 3 -1/4
1 4 -1/4
1 5 -1/4
1 8 1/4
1 11 1/4
1 12 -1/4
1 13 -1/4
1 14 -1/4
1 16 1/4
2 3 -1/4
2 4 1/4
2 5 1/4
2 8 -1/4
2 11 1/4
2 12 -1/4
2 13 -1/4
2 14 1/4
2 16 1/4
3 3 -1/4
3 4 -1/4
3 5 1/4
3 8 1/4
3 11 -1/4
3 12 -1/4
3 13 -1/4
3 14 1/4
3 16 -1/4
4 3 1/4
4 4 -1/4
4 5 1/4
4 8 1/4
4 11 1/4
4 12 1/4
4 13 1/4
4 14 1/4
4 16 1/4
5 1 -1/4
5 3 1/4
5 6 -1/4
5 7 -1/4
5 8 1/4
5 10 1/4
5 14 -1/4
5 17 1/4
5 18 -1/4
6 1 -1/4
6 3 1/4
6 6 1/4
6 7 1/4
6 8 -1/4
6 10 1/4
6 14 -1/4
6 17 1/4
6 18 1/4
7 1 -1/4
7 3 -1/4
7 6 -1/4
7 7 1/4
7 8 1/4
7 10 -1/4
7 14 -1/4
7 17 -1/4
7 18 1/4
8 1 1/4
8 3 1/4
8 6 -1/4
8 7 1/4
8 8 1/4
8 10 1/4
8 14 1/4
8 17 1/4
8 18 1/4
9 1 -1/4
9 2 -1/4
9 4 1/4
9 7 1/4
9 9 1/4
9 12 1/4
9 15 -1/4
9 16 -1/4
9 17 -1/4
10 1 -1/4
10 2 1/4
10 4 -1/4
10 7 1/4
10 9 -1/4
10 12 -1/4
10 15 -1/4
10 16 -1/4
10 17 1/4
11 1 -1/4
11 2 1/4
11 4 1/4
11 7 -1/4
11 9 1/4
11 12 -1/4
11 15 -1/4
11 16 1/4
11 17 1/4
12 1 1/4
12 2 1/4
12 4 1/4
12 7 1/4
12 9 1/4
12 12 -1/4
12 15 1/4
12 16 -1/4
12 17 1/4
13 2 -1/4
13 5 1/4
13 6 1/4
13 9 1/4
13 10 1/4
13 11 -1/4
13 13 -1/4
13 15 1/4
13 18 1/4
14 2 1/4
14 5 -1/4
14 6 1/4
14 9 1/4
14 10 -1/4
14 11 -1/4
14 13 1/4
14 15 -1/4
14 18 1/4
15 2 -1/4
15 5 -1/4
15 6 -1/4
15 9 -1/4
15 10 1/4
15 11 -1/4
15 13 -1/4
15 15 -1/4
15 18 1/4
16 2 -1/4
16 5 -1/4
16 6 1/4
16 9 1/4
16 10 1/4
16 11 1/4
16 13 -1/4
16 15 -1/4
16 18 -1/4
17 4 1/4
17 6 1/4
17 8 -1/4
17 9 1/4
17 13 -1/4
17 14 1/4
17 15 1/4
17 16 1/4
17 17 -1/4
17 18 1/4
18 4 1/4
18 6 1/4
18 8 -1/4
18 9 1/4
18 13 1/4
18 14 -1/4
18 15 -1/4
18 16 1/4
18 17 1/4
18 18 1/4
19 4 1/4
19 6 1/4
19 8 -1/4
19 9 1/4
19 13 -1/4
19 14 -1/4
19 15 -1/4
19 16 -1/4
19 17 -1/4
19 18 -1/4
20 4 1/4
20 6 1/4
20 8 -1/4
20 9 1/4
20 13 1/4
20 14 1/4
20 15 1/4
20 16 -1/4
20 17 1/4
20 18 -1/4
21 1 -1/4
21 5 -1/4
21 7 -1/4
21 8 1/4
21 9 -1/4
21 10 1/4
21 11 -1/4
21 12 1/4
21 14 -1/4
21 15 -1/4
22 1 -1/4
22 5 -1/4
22 7 1/4
22 8 -1/4
22 9 1/4
22 10 1/4
22 11 1/4
22 12 1/4
22 14 -1/4
22 15 -1/4
23 1 -1/4
23 5 -1/4
23 7 -1/4
23 8 -1/4
23 9 1/4
23 10 -1/4
23 11 -1/4
23 12 -1/4
23 14 -1/4
23 15 -1/4
24 1 1/4
24 5 1/4
24 7 -1/4
24 8 -1/4
24 9 1/4
24 10 1/4
24 11 -1/4
24 12 1/4
24 14 1/4
24 15 1/4
25 1 -1/4
25 2 -1/4
25 3 1/4
25 4 -1/4
25 5 1/4
25 6 -1/4
25 7 -1/4
25 11 1/4
25 16 1/4
25 18 -1/4
26 1 -1/4
26 2 -1/4
26 3 1/4
26 4 1/4
26 5 1/4
26 6 1/4
26 7 1/4
26 11 -1/4
26 16 -1/4
26 18 1/4
27 1 -1/4
27 2 1/4
27 3 -1/4
27 4 -1/4
27 5 1/4
27 6 -1/4
27 7 1/4
27 11 -1/4
27 16 -1/4
27 18 1/4
28 1 1/4
28 2 -1/4
28 3 1/4
28 4 -1/4
28 5 -1/4
28 6 -1/4
28 7 1/4
28 11 -1/4
28 16 -1/4
28 18 1/4
29 4 1/4
29 6 1/4
29 8 -1/4
29 9 1/4
29 13 1/4
29 14 1/4
29 15 -1/4
29 16 -1/4
29 17 -1/4
29 18 1/4
30 4 1/4
30 6 1/4
30 8 -1/4
30 9 1/4
30 13 -1/4
30 14 -1/4
30 15 1/4
30 16 -1/4
30 17 1/4
30 18 1/4
31 4 1/4
31 6 1/4
31 8 -1/4
31 9 1/4
31 13 1/4
31 14 -1/4
31 15 1/4
31 16 1/4
31 17 -1/4
31 18 -1/4
32 4 1/4
32 6 1/4
32 8 -1/4
32 9 1/4
32 13 -1/4
32 14 1/4
32 15 -1/4
32 16 1/4
32 17 1/4
32 18 -1/4
33 1 1/4
33 5 1/4
33 7 1/4
33 8 1/4
33 9 1/4
33 10 1/4
33 11 -1/4
33 12 -1/4
33 14 1/4
33 15 1/4
34 1 -1/4
34 5 -1/4
34 7 1/4
34 8 1/4
34 9 1/4
34 10 -1/4
34 11 -1/4
34 12 1/4
34 14 -1/4
34 15 -1/4
35 1 -1/4
35 5 -1/4
35 7 -1/4
35 8 1/4
35 9 1/4
35 10 1/4
35 11 1/4
35 12 -1/4
35 14 -1/4
35 15 -1/4
36 1 1/4
36 5 1/4
36 7 -1/4
36 8 1/4
36 9 1/4
36 10 -1/4
36 11 1/4
36 12 1/4
36 14 1/4
36 15 1/4
37 1 1/4
37 2 1/4
37 3 1/4
37 4 -1/4
37 5 1/4
37 6 1/4
37 7 -1/4
37 11 1/4
37 16 1/4
37 18 -1/4
38 1 1/4
38 2 -1/4
38 3 -1/4
38 4 -1/4
38 5 1/4
38 6 1/4
38 7 1/4
38 11 -1/4
38 16 -1/4
38 18 1/4
39 1 1/4
39 2 1/4
39 3 1/4
39 4 1/4
39 5 1/4
39 6 -1/4
39 7 1/4
39 11 -1/4
39 16 -1/4
39 18 1/4
40 1 -1/4
40 2 1/4
40 3 1/4
40 4 -1/4
40 5 -1/4
40 6 1/4
40 7 1/4
40 11 -1/4
40 16 -1/4
40 18 1/4
0 0 0)";
inline constexpr const char* smirnov336acc_P = R"(18 40 M
1 1 1/2
1 2 -1/2
1 3 -1/2
1 4 -1/2
1 13 -1/2
1 14 1/2
1 15 -1/2
1 16 -1/2
1 21 -1/2
1 22 -1/2
1 23 -1/2
1 24 -1/2
1 25 -1/2
1 26 1/2
1 27 1/2
1 28 1/2
1 33 1/2
1 34 -1/2
1 35 -1/2
1 36 1/2
1 37 -1/2
1 38 -1/2
1 39 1/2
1 40 1/2
2 9 1/2
2 10 -1/2
2 11 1/2
2 12 -1/2
2 13 -1/2
2 14 1/2
2 15 1/2
2 16 1/2
2 17 1/2
2 18 1/2
2 19 1/2
2 20 -1/2
2 21 1/2
2 22 1/2
2 23 -1/2
2 24 -1/2
2 29 1/2
2 30 -1/2
2 31 1/2
2 32 1/2
2 33 1/2
2 34 -1/2
2 35 1/2
2 36 -1/2
3 1 -1/2
3 2 -1/2
3 3 -1/2
3 4 1/2
3 5 -1/2
3 6 -1/2
3 7 1/2
3 8 -1/2
3 17 1/2
3 18 1/2
3 19 1/2
3 20 -1/2
3 21 -1/2
3 22 -1/2
3 23 1/2
3 24 1/2
3 29 1/2
3 30 -1/2
3 31 1/2
3 32 1/2
3 33 1/2
3 34 -1/2
3 35 1/2
3 36 -1/2
4 1 -1/2
4 2 1/2
4 3 -1/2
4 4 -1/2
4 9 -1/2
4 10 1/2
4 11 1/2
4 12 -1/2
4 21 1/2
4 22 -1/2
4 23 -1/2
4 24 1/2
4 33 1/2
4 34 1/2
4 35 1/2
4 36 1/2
5 5 -1/2
5 6 -1/2
5 7 -1/2
5 8 1/2
5 9 -1/2
5 10 -1/2
5 11 1/2
5 12 1/2
5 21 -1/2
5 22 -1/2
5 23 -1/2
5 24 -1/2
5 25 -1/2
5 26 1/2
5 27 1/2
5 28 1/2
5 33 -1/2
5 34 1/2
5 35 1/2
5 36 -1/2
5 37 -1/2
5 38 -1/2
5 39 1/2
5 40 1/2
6 5 1/2
6 6 -1/2
6 7 1/2
6 8 1/2
6 13 1/2
6 14 1/2
6 15 1/2
6 16 -1/2
6 21 1/2
6 22 -1/2
6 23 -1/2
6 24 1/2
6 33 -1/2
6 34 -1/2
6 35 -1/2
6 36 -1/2
7 1 1/2
7 2 1/2
7 3 -1/2
7 4 1/2
7 13 -1/2
7 14 -1/2
7 15 1/2
7 16 -1/2
7 21 1/2
7 22 -1/2
7 23 1/2
7 24 -1/2
7 25 1/2
7 26 1/2
7 27 1/2
7 28 -1/2
7 33 1/2
7 34 1/2
7 35 -1/2
7 36 -1/2
7 37 1/2
7 38 -1/2
7 39 1/2
7 40 -1/2
8 1 1/2
8 2 -1/2
8 3 1/2
8 4 1/2
8 5 1/2
8 6 -1/2
8 7 1/2
8 8 1/2
8 25 1/2
8 26 1/2
8 27 -1/2
8 28 1/2
8 37 1/2
8 38 1/2
8 39 1/2
8 40 1/2
9 9 1/2
9 10 -1/2
9 11 -1/2
9 12 1/2
9 13 1/2
9 14 1/2
9 15 1/2
9 16 -1/2
9 25 -1/2
9 26 -1/2
9 27 1/2
9 28 -1/2
9 37 1/2
9 38 1/2
9 39 1/2
9 40 1/2
10 5 1/2
10 6 1/2
10 7 -1/2
10 8 1/2
10 13 1/2
10 14 -1/2
10 15 -1/2
10 16 -1/2
10 17 -1/2
10 18 -1/2
10 19 -1/2
10 20 1/2
10 25 1/2
10 26 -1/2
10 27 1/2
10 28 1/2
10 29 -1/2
10 30 1/2
10 31 -1/2
10 32 -1/2
10 37 -1/2
10 38 1/2
10 39 1/2
10 40 -1/2
11 5 -1/2
11 6 1/2
11 7 1/2
11 8 1/2
11 9 1/2
11 10 1/2
11 11 1/2
11 12 1/2
11 21 -1/2
11 22 1/2
11 23 -1/2
11 24 1/2
11 25 -1/2
11 26 -1/2
11 27 -1/2
11 28 1/2
11 33 -1/2
11 34 -1/2
11 35 1/2
11 36 1/2
11 37 1/2
11 38 -1/2
11 39 1/2
11 40 -1/2
12 1 -1/2
12 2 -1/2
12 3 -1/2
12 4 1/2
12 9 1/2
12 10 -1/2
12 11 1/2
12 12 -1/2
12 17 1/2
12 18 1/2
12 19 1/2
12 20 -1/2
12 25 1/2
12 26 -1/2
12 27 1/2
12 28 1/2
12 29 1/2
12 30 -1/2
12 31 1/2
12 32 1/2
12 37 1/2
12 38 -1/2
12 39 -1/2
12 40 1/2
13 5 -1/2
13 6 1/2
13 7 -1/2
13 8 -1/2
13 9 1/2
13 10 -1/2
13 11 -1/2
13 12 1/2
13 17 1/2
13 18 -1/2
13 19 1/2
13 20 1/2
13 29 1/2
13 30 1/2
13 31 1/2
13 32 -1/2
14 9 1/2
14 10 1/2
14 11 1/2
14 12 1/2
14 13 1/2
14 14 1/2
14 15 -1/2
14 16 1/2
14 17 -1/2
14 18 1/2
14 19 1/2
14 20 1/2
14 21 -1/2
14 22 1/2
14 23 -1/2
14 24 1/2
14 29 1/2
14 30 1/2
14 31 -1/2
14 32 1/2
14 33 -1/2
14 34 -1/2
14 35 1/2
14 36 1/2
15 1 1/2
15 2 1/2
15 3 -1/2
15 4 1/2
15 5 1/2
15 6 -1/2
15 7 -1/2
15 8 -1/2
15 17 -1/2
15 18 1/2
15 19 1/2
15 20 1/2
15 21 1/2
15 22 -1/2
15 23 1/2
15 24 -1/2
15 29 -1/2
15 30 -1/2
15 31 1/2
15 32 -1/2
15 33 1/2
15 34 1/2
15 35 -1/2
15 36 -1/2
16 5 1/2
16 6 1/2
16 7 1/2
16 8 -1/2
16 13 1/2
16 14 -1/2
16 15 1/2
16 16 1/2
16 17 -1/2
16 18 -1/2
16 19 1/2
16 20 -1/2
16 25 1/2
16 26 -1/2
16 27 -1/2
16 28 -1/2
16 29 -1/2
16 30 1/2
16 31 1/2
16 32 1/2
16 37 1/2
16 38 1/2
16 39 -1/2
16 40 -1/2
17 1 1/2
17 2 -1/2
17 3 1/2
17 4 1/2
17 13 -1/2
17 14 -1/2
17 15 -1/2
17 16 1/2
17 17 1/2
17 18 -1/2
17 19 1/2
17 20 1/2
17 29 -1/2
17 30 -1/2
17 31 -1/2
17 32 1/2
18 1 -1/2
18 2 1/2
18 3 1/2
18 4 1/2
18 9 1/2
18 10 1/2
18 11 -1/2
18 12 -1/2
18 17 -1/2
18 18 -1/2
18 19 1/2
18 20 -1/2
18 25 1/2
18 26 -1/2
18 27 -1/2
18 28 -1/2
18 29 1/2
18 30 -1/2
18 31 -1/2
18 32 -1/2
18 37 1/2
18 38 1/2
18 39 -1/2
18 40 -1/2
0 0 0)";

}  // namespace fmm::data
