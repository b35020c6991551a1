# Fields, density search and file formats
