namespace folalg {}
