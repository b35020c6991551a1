# Point-set types and report records
