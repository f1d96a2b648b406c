from django.urls import path

from decoders import views

app_name = 'decoders'

urlpatterns = [
    path('decode/', views.DecodeView.as_view(), name='decode'),
]
