# Core combinatorics package
