states 9
label 0 1
label 1 2
label 2 3
label 3 4
label 4 5
label 5 6
label 6 7
label 7 8
label 8 9
edge 0 1
edge 0 3
edge 1 5
edge 2 6
edge 3 5
edge 4 6
edge 5 7
edge 6 8
block b1 0
block b23 1 2
block b45 3 4
block b6 5
block b7 6
block b89 7 8
